#include "refhom/io.hpp"

#include <fstream>
#include <sstream>

namespace refhom {

namespace {

// entries may be plain integers or [num, den] pairs
std::pair<Int, Int> parse_fraction(const Json& j) {
  if (j.is_number_integer()) return {Int(j.get<long>()), Int(1)};
  if (j.is_string()) return {Int(j.get<std::string>()), Int(1)};
  if (j.is_array() && j.size() == 2) {
    auto num = j[0].is_string() ? Int(j[0].get<std::string>()) : Int(j[0].get<long>());
    auto den = j[1].is_string() ? Int(j[1].get<std::string>()) : Int(j[1].get<long>());
    return {num, den};
  }
  throw std::invalid_argument("expected integer or [numerator, denominator] pair");
}

std::vector<std::pair<Int, Int>> parse_fraction_vector(const Json& j) {
  std::vector<std::pair<Int, Int>> out;
  for (auto& e : j) out.push_back(parse_fraction(e));
  return out;
}

std::vector<std::vector<std::pair<Int, Int>>> parse_fraction_matrix(const Json& j) {
  std::vector<std::vector<std::pair<Int, Int>>> out;
  for (auto& row : j) out.push_back(parse_fraction_vector(row));
  return out;
}

std::vector<CoeffTriple> parse_triples(const Json& j) {
  std::vector<CoeffTriple> out;
  for (auto& t : j) {
    if (!t.is_array() || (t.size() != 3 && t.size() != 2))
      throw std::invalid_argument("structure constants are [index, numerator, denominator]");
    Index k = t[0].get<long>();
    Int num = t[1].is_string() ? Int(t[1].get<std::string>()) : Int(t[1].get<long>());
    Int den = t.size() == 3
                  ? (t[2].is_string() ? Int(t[2].get<std::string>()) : Int(t[2].get<long>()))
                  : Int(1);
    out.emplace_back(k, num, den);
  }
  return out;
}

}  // namespace

Ring parse_ring(const Json& j) {
  if (j.is_string()) {
    std::string s = j.get<std::string>();
    if (s == "Z") return Ring::integers();
    if (s == "Q") return Ring::rationals();
    if (s.size() > 1 && s[0] == 'F') return Ring::prime_field(std::stoul(s.substr(1)));
    throw std::invalid_argument("unknown ring name: " + s);
  }
  if (j.is_object() && j.contains("Fp")) return Ring::prime_field(j["Fp"].get<unsigned>());
  throw std::invalid_argument("ring must be \"Z\", \"Q\" or {\"Fp\": p}");
}

Json ring_to_json(const Ring& r) {
  switch (r.kind) {
    case Ring::Kind::Integers: return Json("Z");
    case Ring::Kind::Rationals: return Json("Q");
    case Ring::Kind::PrimeField: return Json{{"Fp", r.characteristic}};
  }
  return Json();
}

AlgebraDesc parse_algebra(const Json& j) {
  AlgebraDesc d;
  d.ring = j.contains("ring") ? parse_ring(j.at("ring")) : Ring::integers();
  d.dim = j.at("dim").get<long>();
  if (j.contains("basis"))
    for (auto& b : j.at("basis")) d.basis.push_back(b.get<std::string>());
  else
    for (Index i = 0; i < d.dim; ++i) d.basis.push_back("e" + std::to_string(i));
  d.unit = parse_fraction_vector(j.at("unit"));
  const Json& mul = j.at("mul");
  if (static_cast<Index>(mul.size()) != d.dim)
    throw std::invalid_argument("mul must have dim rows");
  for (auto& row : mul) {
    if (static_cast<Index>(row.size()) != d.dim)
      throw std::invalid_argument("mul must be a dim x dim array of triple lists");
    std::vector<std::vector<CoeffTriple>> r;
    for (auto& cell : row) r.push_back(parse_triples(cell));
    d.mul.push_back(std::move(r));
  }
  d.involution = parse_fraction_matrix(j.at("involution"));
  if (j.contains("bimodule")) {
    const Json& bj = j.at("bimodule");
    BimoduleDesc b;
    b.dim = bj.at("dim").get<long>();
    for (auto& row : bj.at("left")) {
      std::vector<std::vector<CoeffTriple>> r;
      for (auto& cell : row) r.push_back(parse_triples(cell));
      b.left.push_back(std::move(r));
    }
    for (auto& row : bj.at("right")) {
      std::vector<std::vector<CoeffTriple>> r;
      for (auto& cell : row) r.push_back(parse_triples(cell));
      b.right.push_back(std::move(r));
    }
    b.involution = parse_fraction_matrix(bj.at("involution"));
    d.bimodule = std::move(b);
  }
  return d;
}

GroupDesc parse_group(const Json& j) {
  GroupDesc g;
  for (auto& e : j.at("elements")) g.elements.push_back(e.get<std::string>());
  for (auto& row : j.at("table")) {
    std::vector<int> r;
    for (auto& v : row) r.push_back(v.get<int>());
    g.table.push_back(std::move(r));
  }
  return g;
}

bool looks_like_group(const Json& j) { return j.contains("table") && j.contains("elements"); }

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open input file: " + path);
  Json j;
  in >> j;
  return j;
}

DegreeRecord to_degree_record(Index n, const HomologyGroup& h) {
  return DegreeRecord{n, h.free_rank, h.torsion};
}

std::string emit_report(const MachineReport& rep) {
  Json j;
  j["command"] = rep.command;
  j["ring"] = ring_to_json(rep.ring);
  if (!rep.sign.empty()) j["sign"] = rep.sign;
  Json groups = Json::array();
  for (auto& g : rep.groups) {
    Json r;
    r["n"] = g.n;
    r["free_rank"] = g.free_rank;
    Json tors = Json::array();
    for (auto& t : g.torsion) tors.push_back(t.get_str());
    r["torsion"] = tors;
    groups.push_back(r);
  }
  j["groups"] = groups;
  if (!rep.table.empty()) {
    Json table = Json::array();
    for (auto& w : rep.table) {
      Json r;
      r["n"] = w.n;
      r["weight"] = w.weight;
      r["free_rank"] = w.free_rank;
      Json tors = Json::array();
      for (auto& t : w.torsion) tors.push_back(t.get_str());
      r["torsion"] = tors;
      table.push_back(r);
    }
    j["table"] = table;
  }
  Json checks = Json::array();
  for (auto& c : rep.checks) checks.push_back(Json{{"name", c.name}, {"pass", c.pass}});
  j["checks"] = checks;
  return j.dump(2) + "\n";
}

MachineReport parse_report(const std::string& text) {
  Json j = Json::parse(text);
  MachineReport rep;
  rep.command = j.at("command").get<std::string>();
  rep.ring = parse_ring(j.at("ring"));
  if (j.contains("sign")) rep.sign = j.at("sign").get<std::string>();
  for (auto& g : j.at("groups")) {
    DegreeRecord r;
    r.n = g.at("n").get<long>();
    r.free_rank = g.at("free_rank").get<long>();
    for (auto& t : g.at("torsion")) r.torsion.push_back(Int(t.get<std::string>()));
    rep.groups.push_back(std::move(r));
  }
  if (j.contains("table"))
    for (auto& w : j.at("table")) {
      WeightRecord r;
      r.n = w.at("n").get<long>();
      r.weight = w.at("weight").get<int>();
      r.free_rank = w.at("free_rank").get<long>();
      for (auto& t : w.at("torsion")) r.torsion.push_back(Int(t.get<std::string>()));
      rep.table.push_back(std::move(r));
    }
  for (auto& c : j.at("checks"))
    rep.checks.push_back(CheckRecord{c.at("name").get<std::string>(), c.at("pass").get<bool>()});
  return rep;
}

std::string render_table(const MachineReport& rep) {
  std::ostringstream out;
  auto group_name = [&](Index free, const std::vector<Int>& tors) {
    HomologyGroup h{rep.ring, free, tors};
    return h.to_string();
  };
  if (!rep.groups.empty()) {
    out << "  n  HR" << (rep.sign == "minus" ? "-" : rep.sign == "plus" ? "+" : "") << "\n";
    for (auto& g : rep.groups)
      out << "  " << g.n << "  " << group_name(g.free_rank, g.torsion) << "\n";
  }
  if (!rep.table.empty()) {
    out << "  n  weight  HR+\n";
    for (auto& w : rep.table)
      out << "  " << w.n << "  " << w.weight << "      " << group_name(w.free_rank, w.torsion)
          << "\n";
  }
  for (auto& c : rep.checks)
    out << "  [" << (c.pass ? "ok" : "FAIL") << "] " << c.name << "\n";
  return out.str();
}

}  // namespace refhom
