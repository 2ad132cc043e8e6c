// SPDX-License-Identifier: Apache-2.0
#include "fracmod/io.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "fracmod/errors.hpp"

namespace fracmod {

using nlohmann::json;

namespace {

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return char(std::tolower(c)); });
  return s;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

int parse_int(const std::string& s, const std::string& spec) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size()) throw InvalidArgument("bad integer '" + s + "' in function spec '" + spec + "'");
  return v;
}

json number(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

}  // namespace

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

double parse_double(const std::string& s) {
  const std::string l = lower(s);
  if (l == "inf" || l == "infinity" || l == "+inf") return kInf;
  if (l == "-inf" || l == "-infinity") return -kInf;
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size()) throw InvalidArgument("not a number: '" + s + "'");
  return v;
}

double parse_p(const std::string& s) {
  const double p = parse_double(s);
  if (!(p > 0.0)) throw InvalidArgument("p must lie in (0, inf]");
  return p;
}

CorpusMember parse_function_spec(const std::string& spec) {
  const std::vector<std::string> parts = split(spec, ':');
  const std::string& kind = parts[0];
  auto need = [&](std::size_t n) {
    if (parts.size() != n) throw InvalidArgument("malformed function spec '" + spec + "'");
  };
  if (kind == "exp") {
    need(2);
    return {spec, corpus(CorpusKind::exponential, parse_int(parts[1], spec))};
  }
  if (kind == "random") {
    need(3);
    const int deg = parse_int(parts[1], spec);
    const int seed = parse_int(parts[2], spec);
    if (deg < 0 || seed < 0) throw InvalidArgument("negative value in function spec '" + spec + "'");
    return {spec, corpus(CorpusKind::random_smooth, deg, static_cast<std::uint64_t>(seed))};
  }
  if (kind == "sawtooth" || kind == "abssin") {
    need(2);
    const int deg = parse_int(parts[1], spec);
    if (deg < 0) throw InvalidArgument("negative degree in function spec '" + spec + "'");
    return {spec, corpus(kind == "sawtooth" ? CorpusKind::sawtooth_truncated : CorpusKind::abs_sin_truncated, deg)};
  }
  if (kind == "const") {
    if (parts.size() == 1) return {spec, TrigPoly::constant(1.0)};
    need(2);
    return {spec, TrigPoly::constant(parse_double(parts[1]))};
  }
  throw InvalidArgument("unknown function kind in '" + spec + "'");
}

void write_equiv_csv(std::ostream& os, const EquivReport& report) {
  os << kEquivHeader << '\n';
  for (const EquivRow& r : report) {
    os << r.fid;
    for (double v : {r.beta, r.alpha, r.h, r.p, r.omega, r.w, r.omega_tilde, r.omega_star, r.r_w, r.r_tilde,
                     r.r_star})
      os << ',' << format_double(v);
    os << '\n';
  }
}

std::string equiv_json(const EquivReport& report) {
  json rows = json::array();
  for (const EquivRow& r : report) {
    json j;
    j["fid"] = r.fid;
    j["beta"] = r.beta;
    j["alpha"] = r.alpha;
    j["h"] = r.h;
    j["p"] = number(r.p);
    j["omega"] = number(r.omega);
    j["w"] = number(r.w);
    j["omega_tilde"] = number(r.omega_tilde);
    j["omega_star"] = number(r.omega_star);
    j["r_w"] = number(r.r_w);
    j["r_tilde"] = number(r.r_tilde);
    j["r_star"] = number(r.r_star);
    j["infinite_ratio"] = r.infinite_tilde();
    j["best_error"] = number(r.best_error);
    j["r_rescue"] = number(r.r_rescue);
    if (!r.error.empty()) j["error"] = r.error;
    rows.push_back(std::move(j));
  }
  return rows.dump(2) + "\n";
}

void write_curve_csv(std::ostream& os, const std::vector<KernelPoint>& curve) {
  os << "beta,t,x,y\n";
  for (const KernelPoint& p : curve)
    os << format_double(p.beta) << ',' << format_double(p.t) << ',' << format_double(p.x) << ','
       << format_double(p.y) << '\n';
}

std::string zeros_json(const std::vector<ZeroRecord>& records) {
  json recs = json::array();
  for (const ZeroRecord& r : records) {
    json j;
    j["beta"] = r.beta_k;
    j["t"] = r.t_k;
    j["residual"] = r.residual;
    j["branch"] = r.branch_index;
    j["bracket"] = {r.bracket[0], r.bracket[1], r.bracket[2], r.bracket[3]};
    recs.push_back(std::move(j));
  }
  return recs.dump(2) + "\n";
}

std::vector<ZeroRecord> parse_zeros_json(const std::string& text) {
  std::vector<ZeroRecord> out;
  try {
    const json doc = json::parse(text);
    if (!doc.is_array()) throw InvalidArgument("zero registry must be a JSON array");
    for (const json& j : doc) {
      ZeroRecord r;
      r.beta_k = j.at("beta").get<double>();
      r.t_k = j.at("t").get<double>();
      r.residual = j.at("residual").get<double>();
      r.branch_index = j.at("branch").get<int>();
      const json& b = j.at("bracket");
      if (!b.is_array() || b.size() != 4) throw InvalidArgument("bracket must have four entries");
      for (std::size_t i = 0; i < 4; ++i) r.bracket[i] = b[i].get<double>();
      out.push_back(r);
    }
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("malformed zero registry: ") + e.what());
  }
  return out;
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        cur += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        cur += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (c != '\r') {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw IoFailure("cannot open '" + path + "' for writing");
  os << text;
  os.flush();
  if (!os) throw IoFailure("write to '" + path + "' failed");
}

std::string read_file(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw IoFailure("cannot open '" + path + "' for reading");
  std::ostringstream ss;
  ss << is.rdbuf();
  return ss.str();
}

}  // namespace fracmod
