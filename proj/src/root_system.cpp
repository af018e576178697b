#include "qpt/root_system.hpp"

#include <algorithm>
#include <cctype>

namespace qpt {

namespace {

struct ComponentData {
  IntMat cartan;
  IntVec sym;
  long long n_pos;
};

void add_edge(IntMat& c, Eigen::Index i, Eigen::Index j) {
  c(i, j) = Int(-1);
  c(j, i) = Int(-1);
}

ComponentData build_component(char type, int rank) {
  auto chain = [](Eigen::Index r) {
    IntMat c = Int(2) * IntMat::Identity(r, r);
    for (Eigen::Index i = 0; i + 1 < r; ++i) add_edge(c, i, i + 1);
    return c;
  };
  ComponentData out;
  switch (type) {
    case 'A': {
      if (rank < 1) throw SchemaError("type A needs rank >= 1");
      out.cartan = chain(rank);
      out.sym = IntVec::Constant(rank, Int(1));
      out.n_pos = static_cast<long long>(rank) * (rank + 1) / 2;
      return out;
    }
    case 'B': {
      if (rank < 2) throw SchemaError("type B needs rank >= 2");
      out.cartan = chain(rank);
      out.cartan(rank - 1, rank - 2) = Int(-2);  // short root last
      out.sym = IntVec::Constant(rank, Int(2));
      out.sym(rank - 1) = Int(1);
      out.n_pos = static_cast<long long>(rank) * rank;
      return out;
    }
    case 'C': {
      if (rank < 2) throw SchemaError("type C needs rank >= 2");
      out.cartan = chain(rank);
      out.cartan(rank - 2, rank - 1) = Int(-2);  // long root last
      out.sym = IntVec::Constant(rank, Int(1));
      out.sym(rank - 1) = Int(2);
      out.n_pos = static_cast<long long>(rank) * rank;
      return out;
    }
    case 'D': {
      if (rank < 3) throw SchemaError("type D needs rank >= 3");
      IntMat c = Int(2) * IntMat::Identity(rank, rank);
      for (Eigen::Index i = 0; i + 2 < rank; ++i) add_edge(c, i, i + 1);
      add_edge(c, rank - 3, rank - 1);
      out.cartan = std::move(c);
      out.sym = IntVec::Constant(rank, Int(1));
      out.n_pos = static_cast<long long>(rank) * (rank - 1);
      return out;
    }
    case 'E': {
      if (rank < 6 || rank > 8) throw SchemaError("type E needs rank 6, 7 or 8");
      IntMat c = Int(2) * IntMat::Identity(rank, rank);
      add_edge(c, 0, 2);
      add_edge(c, 1, 3);
      for (Eigen::Index i = 2; i + 1 < rank; ++i) add_edge(c, i, i + 1);
      out.cartan = std::move(c);
      out.sym = IntVec::Constant(rank, Int(1));
      out.n_pos = rank == 6 ? 36 : (rank == 7 ? 63 : 120);
      return out;
    }
    case 'F': {
      if (rank != 4) throw SchemaError("type F needs rank 4");
      IntMat c = chain(4);
      c(2, 1) = Int(-2);  // alpha_1, alpha_2 long; alpha_3, alpha_4 short
      out.cartan = std::move(c);
      out.sym = int_vec({2, 2, 1, 1});
      out.n_pos = 24;
      return out;
    }
    case 'G': {
      if (rank != 2) throw SchemaError("type G needs rank 2");
      IntMat c(2, 2);
      c << Int(2), Int(-3), Int(-1), Int(2);  // alpha_1 short, alpha_2 long
      out.cartan = std::move(c);
      out.sym = int_vec({1, 3});
      out.n_pos = 6;
      return out;
    }
    default:
      throw SchemaError(std::string("unknown simple type '") + type + "'");
  }
}

}  // namespace

CartanData CartanData::from_string(std::string_view type) {
  std::vector<ComponentData> comps;
  size_t pos = 0;
  const std::string spec(type);
  while (pos < spec.size()) {
    const char letter = spec[pos];
    if (letter < 'A' || letter > 'G')
      throw SchemaError("bad type string '" + spec + "'");
    size_t end = pos + 1;
    while (end < spec.size() && std::isdigit(static_cast<unsigned char>(spec[end]))) ++end;
    if (end == pos + 1) throw SchemaError("missing rank in type string '" + spec + "'");
    comps.push_back(build_component(letter, std::stoi(spec.substr(pos + 1, end - pos - 1))));
    if (end < spec.size()) {
      if (spec[end] != 'x') throw SchemaError("bad type string '" + spec + "'");
      ++end;
      if (end == spec.size()) throw SchemaError("trailing separator in '" + spec + "'");
    }
    pos = end;
  }
  if (comps.empty()) throw SchemaError("empty type string");

  Eigen::Index total = 0;
  for (const auto& c : comps) total += c.cartan.rows();
  CartanData out;
  out.name_ = spec;
  out.cartan_ = IntMat::Zero(total, total);
  out.sym_ = IntVec(total);
  Eigen::Index at = 0;
  for (const auto& c : comps) {
    const Eigen::Index r = c.cartan.rows();
    out.cartan_.block(at, at, r, r) = c.cartan;
    out.sym_.segment(at, r) = c.sym;
    out.n_pos_ += c.n_pos;
    at += r;
  }
  return out;
}

IntVec simple_reflect(const CartanData& cd, Eigen::Index i, const IntVec& weight) {
  if (i < 0 || i >= cd.rank()) throw PreconditionError("reflection index out of range");
  if (weight.size() != cd.rank()) throw PreconditionError("weight dimension mismatch");
  // alpha_i has fundamental coordinates given by column i of the Cartan matrix.
  return weight - weight(i) * cd.cartan().col(i);
}

IntVec root_reflect(const CartanData& cd, Eigen::Index i, const IntVec& root) {
  if (i < 0 || i >= cd.rank()) throw PreconditionError("reflection index out of range");
  if (root.size() != cd.rank()) throw PreconditionError("root dimension mismatch");
  Int pairing(0);
  for (Eigen::Index j = 0; j < cd.rank(); ++j) pairing += cd.cartan()(i, j) * root(j);
  IntVec out = root;
  out(i) -= pairing;
  return out;
}

IntVec apply_word(const CartanData& cd, const std::vector<int>& word, IntVec weight) {
  for (auto it = word.rbegin(); it != word.rend(); ++it)
    weight = simple_reflect(cd, *it, weight);
  return weight;
}

IntVec apply_word_root(const CartanData& cd, const std::vector<int>& word, IntVec root) {
  for (auto it = word.rbegin(); it != word.rend(); ++it)
    root = root_reflect(cd, *it, root);
  return root;
}

std::vector<int> w0_reduced_word(const CartanData& cd) {
  IntVec lam = IntVec::Constant(cd.rank(), Int(1));  // rho
  std::vector<int> word;
  const long long cap = cd.positive_root_count();
  while (true) {
    Eigen::Index i = -1;
    for (Eigen::Index j = 0; j < cd.rank(); ++j)
      if (lam(j).sign() > 0) {
        i = j;
        break;
      }
    if (i < 0) break;
    word.push_back(static_cast<int>(i));
    lam = simple_reflect(cd, i, lam);
    if (static_cast<long long>(word.size()) > cap)
      throw std::logic_error("rho-descent exceeded the positive root count");
  }
  return word;
}

bool is_reduced_w0_word(const CartanData& cd, const std::vector<int>& word) {
  if (static_cast<long long>(word.size()) != cd.positive_root_count()) return false;
  for (int i : word)
    if (i < 0 || i >= cd.rank()) return false;
  const IntVec rho = IntVec::Constant(cd.rank(), Int(1));
  const IntVec image = apply_word(cd, word, rho);
  for (Eigen::Index j = 0; j < cd.rank(); ++j)
    if (image(j) != Int(-1)) return false;
  return true;
}

ConvexOrder positive_roots_convex(const CartanData& cd, const std::vector<int>& word) {
  if (!is_reduced_w0_word(cd, word))
    throw PreconditionError("not a reduced word for the longest element");
  ConvexOrder out;
  out.word = word;
  out.roots.reserve(word.size());
  for (size_t k = 0; k < word.size(); ++k) {
    IntVec beta = IntVec::Zero(cd.rank());
    beta(word[k]) = Int(1);
    for (size_t t = k; t-- > 0;) beta = root_reflect(cd, word[t], beta);
    out.roots.push_back(std::move(beta));
  }
  return out;
}

Int height(const IntVec& root) {
  Int h(0);
  for (Eigen::Index i = 0; i < root.size(); ++i) h += root(i);
  return h;
}

IntVec root_to_weight(const CartanData& cd, const IntVec& root) {
  return cd.cartan() * root;
}

IntVec weight_to_root(const CartanData& cd, const IntVec& weight) {
  const auto sol = solve_rational(to_rat(cd.cartan()), to_rat(weight));
  if (!sol.solvable) throw std::logic_error("singular Cartan matrix");
  IntVec out(cd.rank());
  for (Eigen::Index i = 0; i < cd.rank(); ++i) {
    if (!sol.particular(i).is_integer())
      throw PreconditionError("weight does not lie in the root lattice");
    out(i) = sol.particular(i).numerator();
  }
  return out;
}

Int pairing_weight_root(const CartanData& cd, const IntVec& weight, const IntVec& root) {
  if (weight.size() != cd.rank() || root.size() != cd.rank())
    throw PreconditionError("pairing dimension mismatch");
  Int out(0);
  for (Eigen::Index i = 0; i < cd.rank(); ++i)
    out += weight(i) * cd.symmetrizer()(i) * root(i);
  return out;
}

Int form_root_root(const CartanData& cd, const IntVec& r1, const IntVec& r2) {
  return pairing_weight_root(cd, root_to_weight(cd, r1), r2);
}

Rat form_weight_weight(const CartanData& cd, const IntVec& w1, const IntVec& w2) {
  const auto sol = solve_rational(to_rat(cd.cartan()), to_rat(w2));
  if (!sol.solvable) throw std::logic_error("singular Cartan matrix");
  Rat out(0);
  for (Eigen::Index i = 0; i < cd.rank(); ++i)
    out += Rat(w1(i)) * Rat(cd.symmetrizer()(i)) * sol.particular(i);
  return out;
}

TauData tau_involution(const CartanData& cd) {
  const auto word = w0_reduced_word(cd);
  TauData out;
  out.tau.resize(static_cast<size_t>(cd.rank()));
  for (Eigen::Index i = 0; i < cd.rank(); ++i) {
    IntVec alpha = IntVec::Zero(cd.rank());
    alpha(i) = Int(1);
    const IntVec image = -apply_word_root(cd, word, alpha);
    Eigen::Index j = -1;
    for (Eigen::Index t = 0; t < cd.rank(); ++t) {
      if (image(t).is_zero()) continue;
      if (j >= 0 || image(t) != Int(1)) throw std::logic_error("-w0 does not permute simples");
      j = t;
    }
    out.tau[static_cast<size_t>(i)] = static_cast<int>(j);
  }
  for (Eigen::Index i = 0; i < cd.rank(); ++i) {
    const int t = out.tau[static_cast<size_t>(i)];
    if (t == static_cast<int>(i))
      out.fixed.push_back(static_cast<int>(i));
    else if (t > static_cast<int>(i))
      out.orbit_reps.push_back(static_cast<int>(i));
  }
  return out;
}

IntMat m_coefficients(const CartanData& cd) {
  const auto word = w0_reduced_word(cd);
  IntMat out(cd.rank(), cd.rank());
  for (Eigen::Index i = 0; i < cd.rank(); ++i) {
    IntVec w = IntVec::Zero(cd.rank());
    w(i) = Int(1);
    const IntVec diff = w - apply_word(cd, word, w);
    out.row(i) = weight_to_root(cd, diff).transpose();
  }
  return out;
}

GradingVector coweight_grading(const CartanData& cd, const IntVec& coweight,
                               const ConvexOrder& order) {
  if (coweight.size() != cd.rank()) throw PreconditionError("coweight dimension mismatch");
  IntVec d(static_cast<Eigen::Index>(order.roots.size()));
  for (size_t k = 0; k < order.roots.size(); ++k) {
    Int deg(0);
    for (Eigen::Index i = 0; i < cd.rank(); ++i) deg += coweight(i) * order.roots[k](i);
    if (deg < Int(1))
      throw PreconditionError("coweight pairs nonpositively with a positive root");
    d(static_cast<Eigen::Index>(k)) = deg;
  }
  return GradingVector(std::move(d));
}

std::vector<int> shuffle_word(const CartanData& cd, std::vector<int> word,
                              SplitMix64& rng, int swaps) {
  if (word.size() < 2) return word;
  for (int t = 0; t < swaps; ++t) {
    const auto p = static_cast<size_t>(rng.range(0, static_cast<long long>(word.size()) - 2));
    const int a = word[p], b = word[p + 1];
    if (a != b && cd.cartan()(a, b).is_zero()) std::swap(word[p], word[p + 1]);
  }
  if (!is_reduced_w0_word(cd, word))
    throw std::logic_error("commuting swaps broke the word");
  return word;
}

}  // namespace qpt
