#pragma once

#include <atomic>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "zemm/catalog.hpp"
#include "zemm/checksum.hpp"
#include "zemm/search.hpp"
#include "zemm/serialize.hpp"

// Batch driver for the genus-8 confirmation run. Results go to
// <out>/results.jsonl, one record per corpus member in corpus order; the
// members themselves are written as edge-list files under <out>/graphs/ and
// listed with checksums in <out>/manifest.txt.
//
// Workers split the corpus (it is embarrassingly parallel); a single
// collector writes the file in corpus order, so output bytes do not depend
// on --jobs. Records carry no timing fields for the same reason. A resumed
// run reuses verbatim any line whose graph name, input checksum and tool
// version still match, which makes interrupted runs idempotent.

namespace zemm {

inline constexpr const char* kToolVersion = "zemm 0.1.0";

struct RunRecord {
  std::string graph;
  std::string checksum;
  ZemmResult result;
  double wall_ms = 0;  // in-memory reporting only, never serialized
  std::string version = kToolVersion;
};

inline Json to_json(const RunRecord& r) {
  Json j;
  j["graph"] = r.graph;
  j["checksum"] = r.checksum;
  j["result"] = to_json(r.graph, r.result);
  j["version"] = r.version;
  return j;
}

struct Genus8Options {
  std::filesystem::path out_dir;
  int jobs = 1;
  bool resume = false;
  std::size_t limit = 0;   // 0 means no limit
  std::string base;        // restrict to extensions of one base graph
  bool write_graphs = true;
  std::ostream* log = nullptr;
};

struct Genus8Summary {
  std::size_t total = 0;
  std::size_t found = 0;
  std::size_t unsat = 0;
  std::size_t reused = 0;
  bool ok() const { return unsat == 0 && found == total; }
};

namespace detail {

inline std::map<std::string, std::string> load_resume_lines(const std::filesystem::path& file) {
  std::map<std::string, std::string> lines;
  std::ifstream in(file);
  if (!in) return lines;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    try {
      const Json j = Json::parse(line);
      if (j.at("version").get<std::string>() != kToolVersion) continue;
      lines[j.at("graph").get<std::string>()] = line;
    } catch (const Json::exception&) {
      continue;  // torn or foreign line; recompute that record
    }
  }
  return lines;
}

}  // namespace detail

inline Genus8Summary run_genus8(const Genus8Options& opt) {
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(opt.out_dir, ec);
  if (ec) throw std::runtime_error("cannot create output directory: " + opt.out_dir.string());

  std::vector<CorpusMember> corpus;
  for (CorpusMember& m : genus8_corpus()) {
    if (!opt.base.empty() && m.base != opt.base) continue;
    corpus.push_back(std::move(m));
    if (opt.limit > 0 && corpus.size() == opt.limit) break;
  }
  if (!opt.base.empty() && corpus.empty())
    throw std::invalid_argument("unknown corpus base graph '" + opt.base + "'");

  std::vector<std::string> texts(corpus.size());
  std::vector<std::string> checksums(corpus.size());
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    texts[i] = to_edge_list(corpus[i].graph);
    checksums[i] = fnv1a64_hex(texts[i]);
  }

  const fs::path results_path = opt.out_dir / "results.jsonl";
  std::map<std::string, std::string> reuse;
  if (opt.resume) reuse = detail::load_resume_lines(results_path);

  Genus8Summary summary;
  summary.total = corpus.size();

  std::vector<std::string> lines(corpus.size());
  std::vector<char> reused(corpus.size(), 0);
  std::atomic<std::size_t> next{0};
  const int jobs = std::max(1, opt.jobs);
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= corpus.size()) return;
      if (auto it = reuse.find(corpus[i].name);
          it != reuse.end() && Json::parse(it->second).at("checksum") == checksums[i]) {
        lines[i] = it->second;
        reused[i] = 1;
        continue;
      }
      RunRecord rec;
      rec.graph = corpus[i].name;
      rec.checksum = checksums[i];
      const auto t0 = std::chrono::steady_clock::now();
      rec.result = solve_zemm(corpus[i].graph);
      rec.wall_ms =
          std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
      lines[i] = to_json(rec).dump();
    }
  };
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    std::exception_ptr first_error;
    std::mutex error_mutex;
    for (int t = 0; t < jobs; ++t)
      pool.emplace_back([&] {
        try {
          worker();
        } catch (...) {
          const std::lock_guard<std::mutex> lock(error_mutex);
          if (!first_error) first_error = std::current_exception();
          next.store(corpus.size());  // wind down the other workers
        }
      });
    for (std::thread& t : pool) t.join();
    if (first_error) std::rethrow_exception(first_error);
  }

  // Collector: everything below writes in corpus order only.
  if (opt.write_graphs) {
    fs::create_directories(opt.out_dir / "graphs", ec);
    if (ec) throw std::runtime_error("cannot create graphs directory");
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      std::ofstream g(opt.out_dir / "graphs" / (corpus[i].name + ".g"), std::ios::binary);
      g << texts[i];
      if (!g) throw std::runtime_error("failed writing graph file for " + corpus[i].name);
    }
    std::ofstream manifest(opt.out_dir / "manifest.txt", std::ios::binary);
    for (std::size_t i = 0; i < corpus.size(); ++i)
      manifest << corpus[i].name << " " << checksums[i] << "\n";
    if (!manifest) throw std::runtime_error("failed writing manifest.txt");
  }

  std::ofstream out(results_path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + results_path.string() + " for writing");
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    out << lines[i] << "\n";
    const Json j = Json::parse(lines[i]);
    const std::string status = j.at("result").at("status").get<std::string>();
    if (status == "Found")
      ++summary.found;
    else if (status == "Unsat")
      ++summary.unsat;
    if (reused[i]) ++summary.reused;
    if (opt.log && (i + 1) % 500 == 0)
      *opt.log << "[zemm] genus8: " << (i + 1) << "/" << corpus.size() << " records written\n";
  }
  if (!out) throw std::runtime_error("failed writing " + results_path.string());
  return summary;
}

}  // namespace zemm
