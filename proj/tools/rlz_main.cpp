// Copyright the rlz contributors. MIT license, see LICENSE in the project root.
//
// Command line front end: encode/decode the run-length text format, factorize
// in three modes, cross-verify them, compute the factor-count compression
// distance between two files, and run synthetic benchmarks.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "rlz/factorization.hpp"
#include "rlz/lz_offline.hpp"
#include "rlz/lz_online.hpp"
#include "rlz/ncd.hpp"
#include "rlz/oracle.hpp"
#include "rlz/rle.hpp"
#include "rlz/rle_io.hpp"
#include "rlz/rle_suffix_array.hpp"
#include "rlz/synth.hpp"

namespace {

constexpr std::uint64_t kNaiveCap = 100000;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw rlz::io_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw rlz::io_error("error reading " + path);
  return ss.str();
}

void write_stdout(std::string_view data) {
  std::cout.write(data.data(), std::streamsize(data.size()));
  std::cout.flush();
}

rlz::FactorMode parse_mode(const std::string& mode) {
  if (mode == "offline") return rlz::FactorMode::offline;
  if (mode == "online") return rlz::FactorMode::online;
  if (mode == "naive") return rlz::FactorMode::naive;
  throw CLI::ValidationError("--mode", "expected offline, online, or naive");
}

struct FactorizeConfig {
  std::string input;
  std::string mode = "offline";
  std::string format = "lengths";
  bool force_naive = false;
  bool dump_sa = false;
};

int cmd_encode(const std::string& input) {
  write_stdout(rlz::write_rle_text(rlz::encode_bytes(read_file(input))));
  return kExitOk;
}

int cmd_decode(const std::string& input) {
  write_stdout(rlz::decode_bytes(rlz::read_rle_text(read_file(input))));
  return kExitOk;
}

nlohmann::json factor_to_json(const rlz::FactorElem<unsigned char>& f) {
  if (const auto* lit = std::get_if<rlz::Literal<unsigned char>>(&f))
    return {{"kind", "literal"}, {"ch", unsigned(lit->ch)}, {"len", 1}};
  const auto& ref = std::get<rlz::Ref>(f);
  return {{"kind", "ref"}, {"src", ref.src}, {"len", ref.len}};
}

void print_pairs(const rlz::Factorization<unsigned char>& factors) {
  std::string out;
  char buf[32];
  for (const auto& f : factors) {
    if (const auto* lit = std::get_if<rlz::Literal<unsigned char>>(&f)) {
      std::snprintf(buf, sizeof buf, "L:%02x\n", unsigned(lit->ch));
      out += buf;
    } else {
      const auto& ref = std::get<rlz::Ref>(f);
      std::snprintf(buf, sizeof buf, "R:%llu,%llu\n", (unsigned long long)ref.src,
                    (unsigned long long)ref.len);
      out += buf;
    }
  }
  write_stdout(out);
}

void print_lengths(const std::vector<std::uint64_t>& lengths) {
  std::string out;
  for (const auto len : lengths) {
    out += std::to_string(len);
    out += '\n';
  }
  write_stdout(out);
}

int cmd_factorize(const FactorizeConfig& cfg) {
  const rlz::FactorMode mode = parse_mode(cfg.mode);
  const std::string data = read_file(cfg.input);
  const auto rle = rlz::encode_bytes(data);

  if (cfg.dump_sa) {
    const auto sa = rlz::RleSuffixArray::build(rle);
    nlohmann::json doc = nlohmann::json::array();
    for (std::size_t i = 1; i <= sa.size(); ++i) doc.push_back(sa.sa_at(i));
    write_stdout(doc.dump() + "\n");
    return kExitOk;
  }

  if (mode == rlz::FactorMode::naive && data.size() > kNaiveCap && !cfg.force_naive) {
    std::cerr << "naive mode is quadratic and capped at " << kNaiveCap
              << " characters; pass --force-naive to run anyway\n";
    return kExitUsage;
  }
  if (mode == rlz::FactorMode::online && cfg.format == "pairs") {
    std::cerr << "online mode emits factor lengths only; previous-occurrence pairs need "
                 "--mode offline or --mode naive\n";
    return kExitUsage;
  }

  std::vector<std::uint64_t> lengths;
  rlz::Factorization<unsigned char> factors;
  const bool have_pairs = mode != rlz::FactorMode::online;
  if (mode == rlz::FactorMode::offline)
    factors = rlz::factorize_offline(rle);
  else if (mode == rlz::FactorMode::naive)
    factors = rlz::oracle::naive_s_factorize_bytes(data);
  else
    lengths = rlz::factorize_online(rle);
  if (have_pairs) lengths = rlz::factor_lengths(factors);

  if (cfg.format == "lengths") {
    print_lengths(lengths);
  } else if (cfg.format == "pairs") {
    print_pairs(factors);
  } else if (cfg.format == "json") {
    nlohmann::json doc;
    doc["factors"] = nlohmann::json::array();
    if (have_pairs)
      for (const auto& f : factors) doc["factors"].push_back(factor_to_json(f));
    else
      for (const auto len : lengths) doc["factors"].push_back({{"len", len}});
    doc["summary"] = {{"N", rle.length()}, {"n", rle.size()}, {"n_lz", lengths.size()}};
    write_stdout(doc.dump() + "\n");
  } else {
    std::cerr << "unknown format " << cfg.format << "; expected lengths, pairs, or json\n";
    return kExitUsage;
  }
  return kExitOk;
}

int cmd_verify(const std::string& input, bool force_naive) {
  const std::string data = read_file(input);
  const auto rle = rlz::encode_bytes(data);
  const auto bytes = std::span<const unsigned char>(
      reinterpret_cast<const unsigned char*>(data.data()), data.size());

  const auto offline = rlz::factorize_offline(rle);
  const auto offline_lengths = rlz::factor_lengths(offline);
  const auto online_lengths = rlz::factorize_online(rle);

  bool ok = true;
  const auto report = [&ok](const std::string& what, bool good) {
    std::cout << what << ": " << (good ? "OK" : "MISMATCH") << "\n";
    ok = ok && good;
  };

  std::cout << "N=" << rle.length() << " n=" << rle.size() << " n_lz=" << offline_lengths.size()
            << "\n";
  report("offline vs online lengths", offline_lengths == online_lengths);
  if (data.size() <= kNaiveCap || force_naive) {
    const auto naive = rlz::oracle::naive_s_factorize_bytes(data);
    report("offline vs naive lengths", offline_lengths == rlz::factor_lengths(naive));
    const auto naive_check = rlz::check_factorization(naive, bytes);
    report("naive references", !naive_check.has_value());
  } else {
    std::cout << "naive mode skipped (input above " << kNaiveCap << " characters)\n";
  }
  const auto offline_check = rlz::check_factorization(offline, bytes);
  if (offline_check) std::cout << "  " << *offline_check << "\n";
  report("offline references", !offline_check.has_value());
  report("factor count within twice the run count", offline_lengths.size() <= 2 * rle.size());

  std::cout << (ok ? "PASS" : "FAIL") << "\n";
  return ok ? kExitOk : kExitVerifyFailure;
}

int cmd_ncd(const std::string& file_a, const std::string& file_b, const std::string& mode) {
  const rlz::FactorMode m = parse_mode(mode);
  const std::string a = read_file(file_a);
  const std::string b = read_file(file_b);
  if (m == rlz::FactorMode::naive && a.size() + b.size() > kNaiveCap) {
    std::cerr << "naive mode is capped at " << kNaiveCap << " characters of combined input\n";
    return kExitUsage;
  }
  const auto res = rlz::ncd_bytes(a, b, m);
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", res.value);
  std::cout << "C(A) = " << res.c_a << "\n"
            << "C(B) = " << res.c_b << "\n"
            << "C(AB) = " << res.c_ab << "\n"
            << "NCD = " << buf << "\n";
  return kExitOk;
}

struct BenchConfig {
  std::vector<std::uint64_t> sizes = {1000000};
  unsigned sigma = 4;
  std::string run_dist = "geometric:0.25";
  std::uint64_t seed = 42;
};

int cmd_bench(const BenchConfig& cfg) {
  const rlz::RunDist dist = rlz::RunDist::parse(cfg.run_dist);
  std::cout << "N,n,mode,wall_ms,peak_pairs\n";
  for (std::size_t idx = 0; idx < cfg.sizes.size(); ++idx) {
    const std::uint64_t size = cfg.sizes[idx];
    const std::string text = rlz::random_rle_text(size, cfg.sigma, dist, cfg.seed + idx);

    const auto time_ms = [](auto&& fn) {
      const auto t0 = std::chrono::steady_clock::now();
      fn();
      const auto t1 = std::chrono::steady_clock::now();
      return std::chrono::duration<double, std::milli>(t1 - t0).count();
    };

    rlz::RleString<unsigned char> rle;
    const double enc_ms = time_ms([&] { rle = rlz::encode_bytes(text); });

    std::uint64_t offline_pairs = 0;
    const double off_ms = time_ms([&] {
      rlz::OfflineFactorizer<unsigned char> fac(rle);
      rlz::RunCursor<unsigned char> cursor(rle);
      std::uint64_t ell = 1;
      while (ell <= rle.length()) {
        const auto [r, q] = cursor.locate(ell);
        fac.catch_up_insert(r);
        ell += fac.next_factor(ell).len;
      }
      offline_pairs = fac.stats().pst_pairs;
    });

    std::uint64_t online_pairs = 0;
    const double on_ms = time_ms([&] {
      rlz::OnlineFactorizer<unsigned char> fz;
      for (const auto& f : rle.runs()) (void)fz.push_run(f);
      (void)fz.finish();
      online_pairs = fz.dawg().stats().pst_pairs_created;
    });

    char row[160];
    std::snprintf(row, sizeof row, "%llu,%zu,encode,%.3f,0\n", (unsigned long long)size,
                  rle.size(), enc_ms);
    std::cout << row;
    std::snprintf(row, sizeof row, "%llu,%zu,offline,%.3f,%llu\n", (unsigned long long)size,
                  rle.size(), off_ms, (unsigned long long)offline_pairs);
    std::cout << row;
    std::snprintf(row, sizeof row, "%llu,%zu,online,%.3f,%llu\n", (unsigned long long)size,
                  rle.size(), on_ms, (unsigned long long)online_pairs);
    std::cout << row;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"greedy factorization of run-length encoded strings"};
  app.require_subcommand(1);

  std::string encode_input;
  auto* sc_encode = app.add_subcommand("encode", "run-length encode a file to text form");
  sc_encode->add_option("input", encode_input, "input file")->required();

  std::string decode_input;
  auto* sc_decode = app.add_subcommand("decode", "decode the text form back to raw bytes");
  sc_decode->add_option("input", decode_input, "rle text file")->required();

  FactorizeConfig fc;
  auto* sc_factorize = app.add_subcommand("factorize", "compute the greedy factorization");
  sc_factorize->add_option("input", fc.input, "input file")->required();
  sc_factorize->add_option("--mode", fc.mode, "offline | online | naive");
  sc_factorize->add_option("--format", fc.format, "lengths | pairs | json");
  sc_factorize->add_flag("--force-naive", fc.force_naive, "lift the naive-mode size cap");
  sc_factorize->add_flag("--dump-sa", fc.dump_sa, "print the run suffix array as JSON and exit");

  std::string verify_input;
  bool verify_force = false;
  auto* sc_verify = app.add_subcommand("verify", "cross-check all modes on one input");
  sc_verify->add_option("input", verify_input, "input file")->required();
  sc_verify->add_flag("--force-naive", verify_force, "lift the naive-mode size cap");

  std::string ncd_a, ncd_b, ncd_mode = "offline";
  auto* sc_ncd = app.add_subcommand("ncd", "factor-count compression distance of two files");
  sc_ncd->add_option("fileA", ncd_a, "first file")->required();
  sc_ncd->add_option("fileB", ncd_b, "second file")->required();
  sc_ncd->add_option("--mode", ncd_mode, "offline | online | naive");

  BenchConfig bc;
  auto* sc_bench = app.add_subcommand("bench", "time the factorizers on synthetic inputs");
  sc_bench->add_option("--sizes", bc.sizes, "input sizes in characters");
  sc_bench->add_option("--sigma", bc.sigma, "alphabet size (1..256)");
  sc_bench->add_option("--run-dist", bc.run_dist, "geometric:<rho> or uniform:<K>");
  sc_bench->add_option("--seed", bc.seed, "generator seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (sc_encode->parsed()) return cmd_encode(encode_input);
    if (sc_decode->parsed()) return cmd_decode(decode_input);
    if (sc_factorize->parsed()) return cmd_factorize(fc);
    if (sc_verify->parsed()) return cmd_verify(verify_input, verify_force);
    if (sc_ncd->parsed()) return cmd_ncd(ncd_a, ncd_b, ncd_mode);
    if (sc_bench->parsed()) return cmd_bench(bc);
  } catch (const rlz::io_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitVerifyFailure;
  }
  return kExitUsage;
}
