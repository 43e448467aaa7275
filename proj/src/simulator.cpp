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

#include "lieplateau/simulator.hpp"

#include <bit>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <random>
#include <stdexcept>
#include <thread>

#include "lieplateau/dense.hpp"

namespace lieplateau {

namespace {
const std::complex<double> kI{0.0, 1.0};

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

int thread_count() {
  if (const char* env = std::getenv("LIEPLATEAU_THREADS")) {
    int t = std::atoi(env);
    if (t >= 1) return t;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return static_cast<int>(std::min(hw == 0 ? 1u : hw, 16u));
}

std::complex<double> i_power(int e) {
  switch (((e % 4) + 4) % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

}  // namespace

Observable Observable::from_pauli(HermitianOp o) {
  Observable out;
  out.kind = Kind::kPauli;
  out.pauli = std::move(o);
  return out;
}

Observable Observable::projector(std::uint64_t bits) {
  Observable out;
  out.kind = Kind::kProjector;
  out.proj_bits = bits;
  return out;
}

Observable Observable::from_dense(Eigen::MatrixXcd m) {
  Observable out;
  out.kind = Kind::kDense;
  out.dense = std::move(m);
  return out;
}

void AnsatzSpec::finalize() {
  gate_gen.clear();
  if (dense_backend) {
    if (dense_generators.empty()) throw std::invalid_argument("ansatz: no generators");
    for (const auto& g : dense_generators) {
      DenseOp d(g);
      if (!d.is_skew_hermitian()) throw std::invalid_argument("ansatz: generator not skew-Hermitian");
    }
  } else {
    if (generators.empty()) throw std::invalid_argument("ansatz: no generators");
    bool all_commute = true;
    for (const auto& g : generators)
      if (!terms_mutually_commute(g)) all_commute = false;
    if (!all_commute) {
      // Product-form rotations would be inexact; fall back to the dense
      // backend when the space fits.
      if ((std::int64_t{1} << n_qubits) > kDenseDimCap)
        throw std::invalid_argument("ansatz: non-commuting generator terms and space over dense cap");
      for (const auto& g : generators) dense_generators.push_back(to_dense(g));
      dense_backend = true;
    }
  }
  const int pool = dense_backend ? static_cast<int>(dense_generators.size())
                                 : static_cast<int>(generators.size());
  for (const auto& layer : layers)
    for (int g : layer) {
      if (g < 0 || g >= pool) throw std::invalid_argument("ansatz: gate references unknown generator");
      gate_gen.push_back(g);
    }
  if (gate_gen.empty()) throw std::invalid_argument("ansatz: no gates");
  if (tags.size() < generators.size()) tags.resize(generators.size());
}

std::int64_t AnsatzSpec::state_dim() const {
  if (dense_backend) return dense_generators.at(0).rows();
  return std::int64_t{1} << n_qubits;
}

AnsatzSpec compound_ansatz(std::uint32_t n, int layers, CompoundVariant variant) {
  if (n < 2) throw std::invalid_argument("compound_ansatz: need n >= 2");
  if (layers < 1) throw std::invalid_argument("compound_ansatz: need layers >= 1");
  AnsatzSpec spec;
  spec.n_qubits = n;

  std::vector<std::pair<int, int>> even_pairs, odd_pairs;
  for (int i = 1; i + 1 <= static_cast<int>(n); i += 2) even_pairs.emplace_back(i, i + 1);
  for (int i = 2; i + 1 <= static_cast<int>(n); i += 2) odd_pairs.emplace_back(i, i + 1);

  auto add_gen = [&](const SkewOp& g, GivensTag tag) {
    spec.generators.push_back(g);
    spec.tags.push_back(tag);
    return static_cast<int>(spec.generators.size()) - 1;
  };
  std::vector<int> even_gates, odd_gates;
  for (auto [i, j] : even_pairs) {
    even_gates.push_back(add_gen(compound_hy(n, i, j), {GivensTag::Kind::kY, i, j}));
    if (variant == CompoundVariant::kSU)
      even_gates.push_back(add_gen(compound_hx(n, i, j), {GivensTag::Kind::kX, i, j}));
  }
  for (auto [i, j] : odd_pairs) {
    odd_gates.push_back(add_gen(compound_hy(n, i, j), {GivensTag::Kind::kY, i, j}));
    if (variant == CompoundVariant::kSU)
      odd_gates.push_back(add_gen(compound_hx(n, i, j), {GivensTag::Kind::kX, i, j}));
  }
  for (int l = 0; l < layers; ++l) spec.layers.push_back((l % 2 == 0) ? even_gates : odd_gates);
  spec.finalize();
  return spec;
}

AnsatzSpec dense_ansatz(std::vector<Eigen::MatrixXcd> generators, int layers) {
  AnsatzSpec spec;
  spec.dense_backend = true;
  spec.dense_generators = std::move(generators);
  std::vector<int> layer(spec.dense_generators.size());
  for (std::size_t i = 0; i < layer.size(); ++i) layer[i] = static_cast<int>(i);
  for (int l = 0; l < layers; ++l) spec.layers.push_back(layer);
  spec.finalize();
  return spec;
}

void apply_pauli_rotation(StateVec& v, const PauliTerm& p, double alpha) {
  const std::int64_t dim = v.size();
  const double c = std::cos(alpha), s = std::sin(alpha);
  if (p.x_mask == 0) {
    const std::complex<double> ph_plus{c, -s}, ph_minus{c, s};
    for (std::int64_t t = 0; t < dim; ++t)
      v(t) *= (std::popcount(static_cast<std::uint64_t>(t) & p.z_mask) & 1) ? ph_minus : ph_plus;
    return;
  }
  const std::complex<double> base = i_power(std::popcount(p.x_mask & p.z_mask));
  const std::int64_t x = static_cast<std::int64_t>(p.x_mask);
  for (std::int64_t t = 0; t < dim; ++t) {
    std::int64_t u = t ^ x;
    if (u < t) continue;
    double sign_t = (std::popcount(static_cast<std::uint64_t>(t) & p.z_mask) & 1) ? -1.0 : 1.0;
    double sign_u = (std::popcount(static_cast<std::uint64_t>(u) & p.z_mask) & 1) ? -1.0 : 1.0;
    std::complex<double> vt = v(t), vu = v(u);
    v(t) = c * vt - kI * s * base * sign_u * vu;  // (Pv)[t] = ph(u) v[u]
    v(u) = c * vu - kI * s * base * sign_t * vt;
  }
}

void apply_rotation(StateVec& state, const SkewOp& a, double theta) {
  for (const auto& [p, coeff] : a.terms()) apply_pauli_rotation(state, p, theta * coeff);
}

StateVec apply_skew(const SkewOp& a, const StateVec& state) {
  StateVec out = StateVec::Zero(state.size());
  for (const auto& [p, coeff] : a.terms()) {
    const std::complex<double> ph = kI * coeff * i_power(std::popcount(p.x_mask & p.z_mask));
    const std::int64_t x = static_cast<std::int64_t>(p.x_mask);
    for (std::int64_t s = 0; s < state.size(); ++s) {
      double sign = (std::popcount(static_cast<std::uint64_t>(s) & p.z_mask) & 1) ? -1.0 : 1.0;
      out(s ^ x) += ph * sign * state(s);
    }
  }
  return out;
}

StateVec apply_observable(const Observable& o, const StateVec& state) {
  switch (o.kind) {
    case Observable::Kind::kPauli: {
      StateVec out = StateVec::Zero(state.size());
      for (const auto& [p, coeff] : o.pauli.terms()) {
        const std::complex<double> ph = coeff * i_power(std::popcount(p.x_mask & p.z_mask));
        const std::int64_t x = static_cast<std::int64_t>(p.x_mask);
        for (std::int64_t s = 0; s < state.size(); ++s) {
          double sign = (std::popcount(static_cast<std::uint64_t>(s) & p.z_mask) & 1) ? -1.0 : 1.0;
          out(s ^ x) += ph * sign * state(s);
        }
      }
      return out;
    }
    case Observable::Kind::kProjector: {
      StateVec out = StateVec::Zero(state.size());
      out(static_cast<std::int64_t>(o.proj_bits)) = state(static_cast<std::int64_t>(o.proj_bits));
      return out;
    }
    case Observable::Kind::kDense:
      return o.dense * state;
  }
  throw std::logic_error("unreachable");
}

double expectation(const StateVec& state, const Observable& o) {
  return state.dot(apply_observable(o, state)).real();
}

namespace {

// ------------------------- simulation engines -------------------------

struct DenseGen {
  Eigen::MatrixXcd evecs;
  Eigen::VectorXd evals;  // of iA (Hermitian); exp(-theta A) = V e^{i theta L} V^dag
  Eigen::MatrixXcd a;
};

// Shared per-run context; gradient() is const and uses caller-local buffers.
class Engine {
 public:
  Engine(const AnsatzSpec& spec, const Observable& obs, const InitialState& rho0, bool sector)
      : spec_(spec), obs_(obs), sector_(sector) {
    if (spec_.gate_gen.empty()) throw std::invalid_argument("engine: ansatz not finalized");
    if (sector_) {
      if (spec_.dense_backend) throw std::invalid_argument("sector simulation needs Pauli generators");
      for (std::size_t g = 0; g < spec_.generators.size(); ++g)
        if (!spec_.tags[g].has_value())
          throw std::invalid_argument("sector simulation needs Givens-tagged generators");
      if (rho0.kind != InitialState::Kind::kBitstring)
        throw std::invalid_argument("sector simulation needs a basis-state initial state");
      weight_ = static_cast<std::uint32_t>(std::popcount(rho0.bits));
      basis_ = hamming_sector(spec_.n_qubits, weight_);
      rank_.assign(std::size_t{1} << spec_.n_qubits, -1);
      for (std::size_t a = 0; a < basis_.size(); ++a)
        rank_[basis_[a]] = static_cast<std::int64_t>(a);
      init_ = StateVec::Zero(static_cast<std::int64_t>(basis_.size()));
      init_(rank_[rho0.bits]) = 1.0;
      if (obs_.kind == Observable::Kind::kProjector && rank_[obs_.proj_bits] < 0)
        throw std::invalid_argument("sector simulation: projector outside the sector");
      if (obs_.kind == Observable::Kind::kDense)
        throw std::invalid_argument("sector simulation: dense observables unsupported");
    } else if (spec_.dense_backend) {
      dense_.reserve(spec_.dense_generators.size());
      for (const auto& a : spec_.dense_generators) {
        DenseGen g;
        g.a = a;
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(kI * a);
        g.evecs = es.eigenvectors();
        g.evals = es.eigenvalues();
        dense_.push_back(std::move(g));
      }
      if (rho0.kind == InitialState::Kind::kDensity)
        throw std::invalid_argument("exact_gradient: initial state must be pure");
      init_ = rho0.to_statevector();
      if (init_.size() != spec_.state_dim())
        throw std::invalid_argument("engine: state dimension mismatch");
    } else {
      if (rho0.kind == InitialState::Kind::kDensity)
        throw std::invalid_argument("exact_gradient: initial state must be pure");
      init_ = rho0.to_statevector();
      if (init_.size() != spec_.state_dim())
        throw std::invalid_argument("engine: state dimension mismatch");
    }
  }

  int slot_count() const { return spec_.slot_count(); }

  double gradient(const std::vector<double>& thetas, int slot) const {
    if (slot < 0 || slot >= slot_count()) throw std::invalid_argument("gradient: slot out of range");
    if (static_cast<int>(thetas.size()) != slot_count())
      throw std::invalid_argument("gradient: wrong parameter count");

    StateVec v = init_;
    for (int g = 0; g <= slot; ++g) apply_gate(v, g, thetas[g]);
    StateVec phi = v;
    for (int g = slot + 1; g < slot_count(); ++g) apply_gate(v, g, thetas[g]);
    StateVec chi = apply_obs(v);
    for (int g = slot_count() - 1; g > slot; --g) apply_gate(chi, g, -thetas[g]);
    StateVec w = apply_gen(spec_.gate_gen[slot], chi);
    return 2.0 * phi.dot(w).real();
  }

 private:
  void apply_gate(StateVec& v, int gate, double theta) const {
    const int g = spec_.gate_gen[gate];
    if (sector_) {
      apply_sector_rotation(v, *spec_.tags[g], theta);
    } else if (spec_.dense_backend) {
      const DenseGen& d = dense_[g];
      Eigen::VectorXcd y = d.evecs.adjoint() * v;
      y.array() *= ((kI * theta) * d.evals.array()).exp();
      v = d.evecs * y;
    } else {
      apply_rotation(v, spec_.generators[g], theta);
    }
  }

  StateVec apply_gen(int g, const StateVec& v) const {
    if (sector_) return apply_sector_skew(v, *spec_.tags[g]);
    if (spec_.dense_backend) return dense_[g].a * v;
    return apply_skew(spec_.generators[g], v);
  }

  StateVec apply_obs(const StateVec& v) const {
    if (!sector_) return apply_observable(obs_, v);
    if (obs_.kind == Observable::Kind::kProjector) {
      StateVec out = StateVec::Zero(v.size());
      out(rank_[obs_.proj_bits]) = v(rank_[obs_.proj_bits]);
      return out;
    }
    StateVec out = StateVec::Zero(v.size());
    for (const auto& [p, coeff] : obs_.pauli.terms()) {
      const std::complex<double> ph = coeff * i_power(std::popcount(p.x_mask & p.z_mask));
      for (std::int64_t a = 0; a < v.size(); ++a) {
        std::uint64_t t = basis_[a] ^ p.x_mask;
        std::int64_t tr = rank_[t];
        if (tr < 0) continue;  // no amplitude outside the sector
        double sign = (std::popcount(basis_[a] & p.z_mask) & 1) ? -1.0 : 1.0;
        out(tr) += ph * sign * v(a);
      }
    }
    return out;
  }

  // 2x2 Givens kernels on the (|0_i 1_j>, |1_i 0_j>) blocks; the Z string
  // between i and j contributes a constant sign per block.
  void apply_sector_rotation(StateVec& v, const GivensTag& tag, double theta) const {
    const std::uint64_t bi = std::uint64_t{1} << (tag.i - 1);
    const std::uint64_t bj = std::uint64_t{1} << (tag.j - 1);
    std::uint64_t zs = 0;
    for (int q = tag.i + 1; q < tag.j; ++q) zs |= std::uint64_t{1} << (q - 1);
    const double c = std::cos(theta / 2), s = std::sin(theta / 2);
    if (tag.kind == GivensTag::Kind::kZ) {
      const std::complex<double> up{c, s}, dn{c, -s};  // e^{+-i theta/2}
      for (std::int64_t a = 0; a < v.size(); ++a) {
        std::uint64_t st = basis_[a];
        bool vi = st & bi, vj = st & bj;
        if (vi == vj) continue;
        v(a) *= vj ? up : dn;  // |0_i 1_j> gets e^{+i theta/2}
      }
      return;
    }
    for (std::int64_t a = 0; a < v.size(); ++a) {
      std::uint64_t st = basis_[a];
      bool vi = st & bi, vj = st & bj;
      if (vi || !vj) continue;  // visit each block once, from |0_i 1_j>
      std::int64_t b = rank_[st ^ bi ^ bj];
      double z = (std::popcount(st & zs) & 1) ? -1.0 : 1.0;
      std::complex<double> v01 = v(a), v10 = v(b);
      if (tag.kind == GivensTag::Kind::kX) {
        v(a) = c * v01 + kI * (z * s) * v10;
        v(b) = c * v10 + kI * (z * s) * v01;
      } else {  // kY
        v(a) = c * v01 + (z * s) * v10;
        v(b) = -(z * s) * v01 + c * v10;
      }
    }
  }

  StateVec apply_sector_skew(const StateVec& v, const GivensTag& tag) const {
    const std::uint64_t bi = std::uint64_t{1} << (tag.i - 1);
    const std::uint64_t bj = std::uint64_t{1} << (tag.j - 1);
    std::uint64_t zs = 0;
    for (int q = tag.i + 1; q < tag.j; ++q) zs |= std::uint64_t{1} << (q - 1);
    StateVec out = StateVec::Zero(v.size());
    for (std::int64_t a = 0; a < v.size(); ++a) {
      std::uint64_t st = basis_[a];
      bool vi = st & bi, vj = st & bj;
      if (vi == vj) continue;
      if (tag.kind == GivensTag::Kind::kZ) {
        out(a) += (vj ? -0.5 * kI : 0.5 * kI) * v(a);
        continue;
      }
      std::int64_t b = rank_[st ^ bi ^ bj];
      double z = (std::popcount(st & zs) & 1) ? -1.0 : 1.0;
      bool is01 = vj;  // |0_i 1_j>
      if (tag.kind == GivensTag::Kind::kX) {
        out(b) += -0.5 * kI * z * v(a);
      } else {  // kY: A = [[0, -z/2], [z/2, 0]] on (v01, v10)
        out(b) += (is01 ? 0.5 : -0.5) * z * v(a);
      }
    }
    return out;
  }

  const AnsatzSpec& spec_;
  const Observable& obs_;
  bool sector_ = false;
  std::uint32_t weight_ = 0;
  std::vector<std::uint64_t> basis_;
  std::vector<std::int64_t> rank_;
  std::vector<DenseGen> dense_;
  StateVec init_;
};

void draw_parameters(const AnsatzSpec& spec, std::uint64_t seed, int sample,
                     std::vector<double>& thetas) {
  std::mt19937_64 rng(splitmix64(seed ^ splitmix64(static_cast<std::uint64_t>(sample) + 1)));
  for (double& th : thetas) {
    double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    th = spec.lo + u * (spec.hi - spec.lo);
  }
}

}  // namespace

double exact_gradient(const AnsatzSpec& spec, const std::vector<double>& thetas, int slot,
                      const Observable& o, const InitialState& rho0, bool sector_sim) {
  Engine engine(spec, o, rho0, sector_sim);
  return engine.gradient(thetas, slot);
}

McEstimate estimate_gradvar(const AnsatzSpec& spec, const Observable& o, const InitialState& rho0,
                            int slot, int samples, std::uint64_t seed, bool sector_sim) {
  if (samples < 100) throw std::invalid_argument("estimate_gradvar: need samples >= 100");
  if (slot < 0) slot = spec.middle_slot();
  auto t0 = std::chrono::steady_clock::now();

  Engine engine(spec, o, rho0, sector_sim);
  std::vector<double> grads(static_cast<std::size_t>(samples));

  const int threads = std::min(thread_count(), samples);
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back([&, t]() {
      std::vector<double> thetas(static_cast<std::size_t>(spec.slot_count()));
      for (int i = t; i < samples; i += threads) {
        draw_parameters(spec, seed, i, thetas);
        grads[static_cast<std::size_t>(i)] = engine.gradient(thetas, slot);
      }
    });
  }
  for (auto& th : pool) th.join();

  // Accumulate in sample order so results do not depend on the thread count.
  double mean = 0.0;
  for (double g : grads) mean += g;
  mean /= samples;
  double m2 = 0.0, m4 = 0.0;
  for (double g : grads) {
    double d = g - mean;
    m2 += d * d;
    m4 += d * d * d * d;
  }
  McEstimate est;
  est.slot = slot;
  est.samples = samples;
  est.seed = seed;
  est.mean = mean;
  est.variance = m2 / (samples - 1);
  double pop_var = m2 / samples;
  est.stderr_variance = std::sqrt(std::max(0.0, m4 / samples - pop_var * pop_var) / samples);
  est.stderr_mean = std::sqrt(est.variance / samples);
  est.wall_time_s =
      std::chrono::duration_cast<std::chrono::duration<double>>(std::chrono::steady_clock::now() - t0)
          .count();
  return est;
}

}  // namespace lieplateau
