// Copyright 2026 The lieplateau authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "lieplateau/io.hpp"

#include <fstream>
#include <sstream>

namespace lieplateau {

using nlohmann::json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write file: " + path);
  out << content;
}

OperatorFile parse_operator_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  bool skew = false, header_seen = false;
  std::vector<std::pair<PauliTerm, double>> terms;
  std::uint32_t n = 0;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos) continue;
    if (line[start] == '#') continue;
    std::istringstream ls(line);
    if (!header_seen) {
      std::string kind;
      ls >> kind;
      if (kind == "skew")
        skew = true;
      else if (kind == "hermitian")
        skew = false;
      else
        throw ParseError("line " + std::to_string(lineno) + ": expected header 'skew' or 'hermitian'");
      header_seen = true;
      continue;
    }
    double coeff;
    std::string pauli;
    if (!(ls >> coeff >> pauli))
      throw ParseError("line " + std::to_string(lineno) + ": expected '<coefficient> <pauli string>'");
    PauliTerm p = [&] {
      try {
        return PauliTerm::from_string(pauli);
      } catch (const std::exception& e) {
        throw ParseError("line " + std::to_string(lineno) + ": " + e.what());
      }
    }();
    if (n == 0) n = p.n_qubits;
    if (p.n_qubits != n)
      throw ParseError("line " + std::to_string(lineno) + ": inconsistent qubit count");
    terms.emplace_back(p, coeff);
  }
  if (!header_seen) throw ParseError("missing header line 'skew' or 'hermitian'");
  if (terms.empty()) throw ParseError("operator file has no terms");
  if (skew) {
    SkewOp a(n);
    for (auto& [p, c] : terms) a.add_term(p, c);
    return a;
  }
  HermitianOp o(n);
  for (auto& [p, c] : terms) o.add_term(p, c);
  return o;
}

OperatorFile load_operator_file(const std::string& path) {
  return parse_operator_text(read_file(path));
}

namespace {
std::string format_terms(const PauliCoeffs& terms, const char* header) {
  std::ostringstream out;
  out << header << "\n";
  out.precision(17);
  for (const auto& [p, c] : terms) out << c << " " << p.to_string() << "\n";
  return out.str();
}
}  // namespace

std::string format_operator_text(const SkewOp& a) { return format_terms(a.terms(), "skew"); }
std::string format_operator_text(const HermitianOp& o) {
  return format_terms(o.terms(), "hermitian");
}

json basis_to_json(const PauliDlaBasis& basis, const StructureData& s) {
  json j;
  j["schema"] = "lieplateau/basis/v1";
  j["n_qubits"] = basis.elements.empty() ? 0 : basis.elements[0].n_qubits();
  j["dim"] = basis.dim();
  j["truncated"] = basis.truncated;
  j["tol"] = basis.tol;
  j["depth"] = basis.depth;
  json elems = json::array();
  for (const auto& e : basis.elements) {
    json terms = json::array();
    for (const auto& [p, c] : e.terms()) terms.push_back({p.to_string(), c});
    elems.push_back(terms);
  }
  j["elements"] = elems;
  // Sparse triplets f(q,k,j) for q < k; antisymmetry in (q,k) is implied.
  json f = json::array();
  for (int q = 0; q < s.dim; ++q)
    for (int k = q + 1; k < s.dim; ++k)
      for (int jj = 0; jj < s.dim; ++jj) {
        double v = s.ad[q](jj, k);
        if (v != 0.0) f.push_back({q, k, jj, v});
      }
  j["structure_constants"] = f;
  return j;
}

void basis_from_json(const json& j, PauliDlaBasis& basis, StructureData& s) {
  try {
    if (j.at("schema") != "lieplateau/basis/v1") throw ParseError("unknown basis schema");
    basis = PauliDlaBasis{};
    basis.truncated = j.at("truncated").get<bool>();
    basis.tol = j.at("tol").get<double>();
    basis.depth = j.at("depth").get<std::vector<int>>();
    for (const auto& elem : j.at("elements")) {
      SkewOp op;
      for (const auto& term : elem)
        op.add_term(PauliTerm::from_string(term.at(0).get<std::string>()), term.at(1).get<double>());
      basis.elements.push_back(std::move(op));
    }
    const int d = basis.dim();
    s = StructureData{};
    s.dim = d;
    s.ad.assign(d, Eigen::MatrixXd::Zero(d, d));
    for (const auto& t : j.at("structure_constants")) {
      int q = t.at(0).get<int>(), k = t.at(1).get<int>(), jj = t.at(2).get<int>();
      double v = t.at(3).get<double>();
      s.ad[q](jj, k) = v;
      s.ad[k](jj, q) = -v;
    }
    s.gram.setZero(d, d);
    for (int q = 0; q < d; ++q)
      for (int r = q; r < d; ++r) {
        double g = (s.ad[q].transpose() * s.ad[r]).trace();
        s.gram(q, r) = g;
        s.gram(r, q) = g;
      }
  } catch (const json::exception& e) {
    throw ParseError(std::string("basis json: ") + e.what());
  }
}

json ideals_to_json(const IdealDecomposition& dec) {
  json j;
  j["schema"] = "lieplateau/ideals/v1";
  j["dim"] = dec.dla_dim();
  auto mat_to_json = [](const Eigen::MatrixXd& m) {
    json cols = json::array();
    for (int c = 0; c < m.cols(); ++c) {
      json col = json::array();
      for (int r = 0; r < m.rows(); ++r) col.push_back(m(r, c));
      cols.push_back(col);
    }
    return cols;
  };
  j["center"] = mat_to_json(dec.center);
  json ideals = json::array();
  for (std::size_t a = 0; a < dec.ideals.size(); ++a) {
    json ideal;
    ideal["dim"] = dec.ideals[a].cols();
    ideal["kappa"] = dec.kappa[a];
    ideal["basis"] = mat_to_json(dec.ideals[a]);
    ideals.push_back(ideal);
  }
  j["ideals"] = ideals;
  return j;
}

IdealDecomposition ideals_from_json(const json& j) {
  try {
    if (j.at("schema") != "lieplateau/ideals/v1") throw ParseError("unknown ideals schema");
    const int d = j.at("dim").get<int>();
    auto mat_from_json = [d](const json& cols) {
      Eigen::MatrixXd m(d, static_cast<int>(cols.size()));
      for (int c = 0; c < m.cols(); ++c)
        for (int r = 0; r < d; ++r) m(r, c) = cols.at(c).at(r).get<double>();
      return m;
    };
    IdealDecomposition dec;
    dec.center = mat_from_json(j.at("center"));
    if (dec.center.cols() == 0) dec.center.resize(d, 0);
    for (const auto& ideal : j.at("ideals")) {
      dec.ideals.push_back(mat_from_json(ideal.at("basis")));
      dec.kappa.push_back(ideal.at("kappa").get<double>());
    }
    return dec;
  } catch (const json::exception& e) {
    throw ParseError(std::string("ideals json: ") + e.what());
  }
}

json ansatz_to_json(const AnsatzSpec& spec) {
  json j;
  j["schema"] = "lieplateau/ansatz/v1";
  j["n_qubits"] = spec.n_qubits;
  j["lo"] = spec.lo;
  j["hi"] = spec.hi;
  json gens = json::array();
  for (std::size_t g = 0; g < spec.generators.size(); ++g) {
    json gen;
    json terms = json::array();
    for (const auto& [p, c] : spec.generators[g].terms()) terms.push_back({p.to_string(), c});
    gen["terms"] = terms;
    if (g < spec.tags.size() && spec.tags[g].has_value()) {
      const GivensTag& tag = *spec.tags[g];
      const char* kind = tag.kind == GivensTag::Kind::kX   ? "x"
                         : tag.kind == GivensTag::Kind::kY ? "y"
                                                           : "z";
      gen["givens"] = {{"kind", kind}, {"i", tag.i}, {"j", tag.j}};
    }
    gens.push_back(gen);
  }
  j["generators"] = gens;
  j["layers"] = spec.layers;
  return j;
}

AnsatzSpec ansatz_from_json(const json& j) {
  try {
    if (j.at("schema") != "lieplateau/ansatz/v1") throw ParseError("unknown ansatz schema");
    AnsatzSpec spec;
    spec.n_qubits = j.at("n_qubits").get<std::uint32_t>();
    spec.lo = j.at("lo").get<double>();
    spec.hi = j.at("hi").get<double>();
    for (const auto& gen : j.at("generators")) {
      SkewOp op(spec.n_qubits);
      for (const auto& term : gen.at("terms"))
        op.add_term(PauliTerm::from_string(term.at(0).get<std::string>()), term.at(1).get<double>());
      spec.generators.push_back(std::move(op));
      if (gen.contains("givens")) {
        const auto& g = gen.at("givens");
        std::string kind = g.at("kind").get<std::string>();
        GivensTag tag;
        tag.kind = kind == "x"   ? GivensTag::Kind::kX
                   : kind == "y" ? GivensTag::Kind::kY
                                 : GivensTag::Kind::kZ;
        tag.i = g.at("i").get<int>();
        tag.j = g.at("j").get<int>();
        spec.tags.push_back(tag);
      } else {
        spec.tags.push_back(std::nullopt);
      }
    }
    spec.layers = j.at("layers").get<std::vector<std::vector<int>>>();
    spec.finalize();
    return spec;
  } catch (const json::exception& e) {
    throw ParseError(std::string("ansatz json: ") + e.what());
  }
}

json report_to_json(const VarianceReport& rep) {
  json j;
  j["schema"] = "lieplateau/variance_report/v1";
  j["total"] = rep.total;
  j["lasa_residual"] = rep.lasa_residual_o;
  j["truncated"] = rep.truncated;
  json ideals = json::array();
  for (const auto& t : rep.ideals) {
    ideals.push_back({{"dim", t.dim},
                      {"killing_h", t.killing_h},
                      {"frob_o", t.frob_o},
                      {"frob_rho", t.frob_rho},
                      {"term", t.term}});
  }
  j["ideals"] = ideals;
  return j;
}

json estimate_to_json(const McEstimate& est) {
  json j;
  j["schema"] = "lieplateau/mc_estimate/v1";
  j["slot"] = est.slot;
  j["samples"] = est.samples;
  j["mean"] = est.mean;
  j["variance"] = est.variance;
  j["stderr_variance"] = est.stderr_variance;
  j["stderr_mean"] = est.stderr_mean;
  j["seed"] = est.seed;
  j["timing"] = {{"wall_time_s", est.wall_time_s}};
  return j;
}

json walk_to_json(const MomentWalk& walk, const StableRankReport& ranks) {
  json j;
  j["schema"] = "lieplateau/mixing/v1";
  j["t"] = walk.t;
  j["gap"] = walk.gap;
  j["invariant_dim"] = walk.invariant_dim;
  j["stable_rank"] = {{"per_generator", ranks.per_generator}, {"r_k", ranks.r_k}};
  return j;
}

InitialState parse_state_spec(const std::string& spec, std::uint32_t n_qubits) {
  if (spec == "uniform") return InitialState::uniform(n_qubits);
  if (spec.rfind("hamming:", 0) == 0) {
    int k = -1;
    try {
      k = std::stoi(spec.substr(8));
    } catch (const std::exception&) {
      throw ParseError("bad hamming state spec: " + spec);
    }
    if (k < 0 || static_cast<std::uint32_t>(k) > n_qubits)
      throw ParseError("hamming weight out of range: " + spec);
    return InitialState::bitstring(n_qubits,
                                   canonical_hamming_bits(n_qubits, static_cast<std::uint32_t>(k)));
  }
  std::string bits = spec.rfind("basis:", 0) == 0 ? spec.substr(6) : spec;
  if (bits.size() != n_qubits) throw ParseError("bitstring length must equal qubit count: " + spec);
  std::uint64_t b = 0;
  for (std::size_t q = 0; q < bits.size(); ++q) {
    if (bits[q] == '1')
      b |= std::uint64_t{1} << q;
    else if (bits[q] != '0')
      throw ParseError("bitstring must be over {0,1}: " + spec);
  }
  return InitialState::bitstring(n_qubits, b);
}

Observable parse_observable_spec(const std::string& spec, std::uint32_t n_qubits) {
  auto parse_qubit = [&](const std::string& s) {
    int q = -1;
    try {
      q = std::stoi(s);
    } catch (const std::exception&) {
      throw ParseError("bad qubit index in observable spec: " + spec);
    }
    if (q < 1 || static_cast<std::uint32_t>(q) > n_qubits)
      throw ParseError("qubit index out of range in observable spec: " + spec);
    return q;
  };
  if (spec.rfind("hz:", 0) == 0) {
    std::string rest = spec.substr(3);
    auto comma = rest.find(',');
    if (comma == std::string::npos) throw ParseError("hz spec needs two qubits: " + spec);
    int i = parse_qubit(rest.substr(0, comma));
    int j = parse_qubit(rest.substr(comma + 1));
    HermitianOp o(n_qubits);
    o.add_term(PauliTerm(n_qubits, 0, std::uint64_t{1} << (i - 1)), 0.25);
    o.add_term(PauliTerm(n_qubits, 0, std::uint64_t{1} << (j - 1)), -0.25);
    return Observable::from_pauli(std::move(o));
  }
  if (spec.rfind("z:", 0) == 0) {
    int i = parse_qubit(spec.substr(2));
    HermitianOp o(n_qubits);
    o.add_term(PauliTerm(n_qubits, 0, std::uint64_t{1} << (i - 1)), 0.25);
    return Observable::from_pauli(std::move(o));
  }
  if (spec.rfind("proj:", 0) == 0) {
    std::string bits = spec.substr(5);
    InitialState s = parse_state_spec(bits, n_qubits);
    if (s.kind != InitialState::Kind::kBitstring)
      throw ParseError("proj observable needs a bitstring: " + spec);
    return Observable::projector(s.bits);
  }
  throw ParseError("unknown observable spec: " + spec);
}

}  // namespace lieplateau
