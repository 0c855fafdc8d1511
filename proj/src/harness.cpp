// Copyright (C) 2026 The arrow3 authors
// SPDX-License-Identifier: Apache-2.0

#include "arrow3/harness.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "arrow3/oracle.hpp"

namespace arrow3 {

std::string_view dist_name(Dist d) {
  switch (d) {
    case Dist::Uniform01: return "uniform";
    case Dist::Normal01: return "normal";
    case Dist::ChiSq1: return "chisq";
  }
  return "unknown";
}

std::optional<Dist> dist_from_name(std::string_view name) {
  if (name == "uniform") return Dist::Uniform01;
  if (name == "normal") return Dist::Normal01;
  if (name == "chisq") return Dist::ChiSq1;
  return std::nullopt;
}

std::uint64_t dist_stream_tag(Dist d) {
  switch (d) {
    case Dist::Uniform01: return 1;
    case Dist::Normal01: return 2;
    case Dist::ChiSq1: return 3;
  }
  return 0;
}

namespace {

double draw(Dist dist, TrialStream& stream) {
  switch (dist) {
    case Dist::Uniform01: return stream.uniform01();
    case Dist::Normal01: return stream.normal01();
    case Dist::ChiSq1: return stream.chisq1();
  }
  return 0.0;
}

}  // namespace

SymMat3 gen_sym3(Dist dist, TrialStream& stream) {
  const double a11 = draw(dist, stream);
  const double a12 = draw(dist, stream);
  const double a13 = draw(dist, stream);
  const double a22 = draw(dist, stream);
  const double a23 = draw(dist, stream);
  const double a33 = draw(dist, stream);
  return SymMat3(a11, a12, a13, a22, a23, a33);
}

std::pair<double, double> metrics(const SymMat3& t, const EigenDecomp3& e) {
  const Mat3 vt_v = transpose(e.V) * e.V;
  Mat3 orth_err = Mat3::identity();
  for (std::size_t i = 0; i < 9; ++i) orth_err.m[i] -= vt_v.m[i];

  Mat3 resid_err = t.to_mat3() * e.V;
  for (int c = 0; c < 3; ++c) {
    for (int r = 0; r < 3; ++r) resid_err(r, c) -= e.V(r, c) * e.lambda[static_cast<std::size_t>(c)];
  }
  return {frob_norm(orth_err), frob_norm(resid_err)};
}

namespace {

TrialRecord run_trial(const RunConfig& cfg, std::uint64_t index) {
  TrialStream stream(cfg.seed, dist_stream_tag(cfg.dist), index);
  const SymMat3 t = gen_sym3(cfg.dist, stream);

  SolveConfig scfg;
  scfg.method = cfg.method;
  scfg.c_deflate = cfg.c_deflate;
  scfg.c_term = cfg.c_term;
  const EigenDecomp3 main = solve(t, scfg);
  const OracleResult base = baseline_eig3(t);

  TrialRecord rec;
  rec.index = index;
  rec.dist = cfg.dist;
  std::tie(rec.orth_err_main, rec.resid_err_main) = metrics(t, main);
  std::tie(rec.orth_err_base, rec.resid_err_base) = metrics(t, EigenDecomp3(base.lambda, base.V));
  return rec;
}

MetricSummary summarize(std::vector<double> values) {
  MetricSummary s;
  if (values.empty()) return s;
  s.max = *std::max_element(values.begin(), values.end());
  std::sort(values.begin(), values.end());
  const std::size_t n = values.size();
  s.median = (n % 2 == 1) ? values[n / 2] : 0.5 * (values[n / 2 - 1] + values[n / 2]);
  return s;
}

}  // namespace

RunResult run_comparison(const RunConfig& cfg, bool parallel) {
  if (cfg.n_matrices < 1) throw std::invalid_argument("run_comparison: n_matrices must be >= 1");

  RunResult result;
  result.records.resize(cfg.n_matrices);
  const auto n = static_cast<std::ptrdiff_t>(cfg.n_matrices);
  std::exception_ptr error;
  if (parallel) {
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
      try {
        result.records[static_cast<std::size_t>(i)] = run_trial(cfg, static_cast<std::uint64_t>(i));
      } catch (...) {
#pragma omp critical
        if (!error) error = std::current_exception();
      }
    }
  } else {
    for (std::ptrdiff_t i = 0; i < n; ++i) {
      result.records[static_cast<std::size_t>(i)] = run_trial(cfg, static_cast<std::uint64_t>(i));
    }
  }
  if (error) std::rethrow_exception(error);

  std::vector<double> om, rm, ob, rb;
  om.reserve(cfg.n_matrices);
  rm.reserve(cfg.n_matrices);
  ob.reserve(cfg.n_matrices);
  rb.reserve(cfg.n_matrices);
  for (const TrialRecord& r : result.records) {
    om.push_back(r.orth_err_main);
    rm.push_back(r.resid_err_main);
    ob.push_back(r.orth_err_base);
    rb.push_back(r.resid_err_base);
  }
  result.summary.orth_main = summarize(std::move(om));
  result.summary.resid_main = summarize(std::move(rm));
  result.summary.orth_base = summarize(std::move(ob));
  result.summary.resid_base = summarize(std::move(rb));

  if (!cfg.output_path.empty()) write_records_csv(cfg.output_path, result.records);
  return result;
}

SortedDifferences sorted_differences(std::span<const TrialRecord> records) {
  if (records.empty()) throw std::invalid_argument("sorted_differences: no records");
  SortedDifferences out;
  out.orth.reserve(records.size());
  out.resid.reserve(records.size());
  for (const TrialRecord& r : records) {
    out.orth.push_back(r.orth_err_base - r.orth_err_main);
    out.resid.push_back(r.resid_err_base - r.resid_err_main);
  }
  std::sort(out.orth.begin(), out.orth.end());
  std::sort(out.resid.begin(), out.resid.end());
  return out;
}

std::string format_double(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

void write_records_csv(const std::string& path, std::span<const TrialRecord> records) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open for writing: " + path);
  out << "index,dist,orth_main,resid_main,orth_base,resid_base\n";
  for (const TrialRecord& r : records) {
    out << r.index << ',' << dist_name(r.dist) << ',' << format_double(r.orth_err_main) << ','
        << format_double(r.resid_err_main) << ',' << format_double(r.orth_err_base) << ','
        << format_double(r.resid_err_base) << '\n';
  }
  if (!out) throw IoError("write failed: " + path);
}

namespace {

double parse_double(std::string_view field, const std::string& path) {
  double v = 0.0;
  const auto res = std::from_chars(field.data(), field.data() + field.size(), v);
  if (res.ec != std::errc() || res.ptr != field.data() + field.size())
    throw IoError("bad numeric field '" + std::string(field) + "' in " + path);
  return v;
}

}  // namespace

std::vector<TrialRecord> read_records_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open for reading: " + path);
  std::string line;
  if (!std::getline(in, line) || line != "index,dist,orth_main,resid_main,orth_base,resid_base")
    throw IoError("missing or malformed header in " + path);

  std::vector<TrialRecord> records;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::array<std::string_view, 6> fields;
    std::string_view rest = line;
    for (std::size_t k = 0; k < 6; ++k) {
      const std::size_t comma = rest.find(',');
      if (k < 5) {
        if (comma == std::string_view::npos) throw IoError("short row in " + path);
        fields[k] = rest.substr(0, comma);
        rest = rest.substr(comma + 1);
      } else {
        if (comma != std::string_view::npos) throw IoError("long row in " + path);
        fields[k] = rest;
      }
    }
    TrialRecord r;
    r.index = static_cast<std::uint64_t>(parse_double(fields[0], path));
    const auto d = dist_from_name(fields[1]);
    if (!d) throw IoError("unknown distribution '" + std::string(fields[1]) + "' in " + path);
    r.dist = *d;
    r.orth_err_main = parse_double(fields[2], path);
    r.resid_err_main = parse_double(fields[3], path);
    r.orth_err_base = parse_double(fields[4], path);
    r.resid_err_base = parse_double(fields[5], path);
    records.push_back(r);
  }
  return records;
}

void write_diff_csv(const std::string& path, std::span<const double> deltas) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open for writing: " + path);
  out << "rank,delta\n";
  for (std::size_t i = 0; i < deltas.size(); ++i) {
    out << (i + 1) << ',' << format_double(deltas[i]) << '\n';
  }
  if (!out) throw IoError("write failed: " + path);
}

}  // namespace arrow3
