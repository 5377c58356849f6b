#include "diagsurf/codes.hpp"

#include <string>

#include "diagsurf/counts.hpp"
#include "diagsurf/hermitian.hpp"

namespace diagsurf {

namespace {

void append_monomials(unsigned var, unsigned vars, unsigned remaining, std::vector<unsigned>& exps,
                      std::vector<Monomial>& out) {
  if (var + 1 == vars) {
    exps[var] = remaining;
    out.push_back(Monomial{exps});
    return;
  }
  for (unsigned e = remaining + 1; e-- > 0;) {
    exps[var] = e;
    append_monomials(var + 1, vars, remaining - e, exps, out);
  }
}

}  // namespace

std::vector<Monomial> monomial_basis(unsigned s, unsigned h) {
  if (s < 1 || h < 1) throw Error(ErrorKind::BadParams, "monomial basis needs s, h >= 1");
  std::vector<Monomial> out;
  std::vector<unsigned> exps(s + 1, 0);
  append_monomials(0, s + 1, h, exps, out);
  return out;
}

GeneratorMatrix evaluation_matrix(const Field& field, const PointMatrix& points, unsigned h) {
  if (points.size() == 0) throw Error(ErrorKind::BadParams, "empty point set");
  const auto monomials = monomial_basis(points.dim, h);
  GeneratorMatrix g;
  g.rows = monomials.size();
  g.cols = points.size();
  g.entries.resize(g.rows * g.cols);
  for (std::size_t i = 0; i < g.rows; ++i) {
    for (std::size_t j = 0; j < g.cols; ++j) {
      const auto pt = points.point(j);
      Element v = Field::one();
      for (std::size_t t = 0; t < pt.size(); ++t) {
        const unsigned e = monomials[i].exponents[t];
        if (e > 0) v = field.mul(v, field.pow(pt[t], e));
      }
      g.at(i, j) = v;
    }
  }
  return g;
}

GeneratorMatrix row_basis(const Field& field, const GeneratorMatrix& g) {
  GeneratorMatrix m = g;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.cols && rank < m.rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < m.rows && m.at(pivot, col).code == 0) ++pivot;
    if (pivot == m.rows) continue;
    if (pivot != rank) {
      for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(pivot, j), m.at(rank, j));
    }
    const Element scale = field.inv(m.at(rank, col));
    for (std::size_t j = 0; j < m.cols; ++j) m.at(rank, j) = field.mul(m.at(rank, j), scale);
    for (std::size_t i = 0; i < m.rows; ++i) {
      if (i == rank || m.at(i, col).code == 0) continue;
      const Element factor = m.at(i, col);
      for (std::size_t j = 0; j < m.cols; ++j) {
        m.at(i, j) = field.sub(m.at(i, j), field.mul(factor, m.at(rank, j)));
      }
    }
    ++rank;
  }
  m.rows = rank;
  m.entries.resize(rank * m.cols);
  return m;
}

std::set<std::size_t> WeightDistribution::nonzero_weights() const {
  std::set<std::size_t> out;
  for (const auto& [w, c] : counts) {
    if (w != 0 && c != 0) out.insert(w);
  }
  return out;
}

std::size_t WeightDistribution::min_nonzero_weight() const {
  const auto ws = nonzero_weights();
  return ws.empty() ? n + 1 : *ws.begin();
}

std::uint64_t WeightDistribution::total() const {
  std::uint64_t t = 0;
  for (const auto& [w, c] : counts) t += c;
  return t;
}

WeightDistribution weight_distribution(const Field& field, const GeneratorMatrix& g, const Limits& limits) {
  const GeneratorMatrix basis = row_basis(field, g);
  WeightDistribution wd;
  wd.n = g.cols;
  wd.kdim = basis.rows;

  unsigned long long messages = 1;
  for (std::size_t i = 0; i < basis.rows; ++i) {
    messages *= field.size();
    if (messages > limits.max_codewords) {
      throw Error(ErrorKind::SizeExceeded, "rank " + std::to_string(basis.rows) + " over F_" +
                                               std::to_string(field.size()) + " exceeds codeword bound " +
                                               std::to_string(limits.max_codewords));
    }
  }

  // F_p basis of the row space: alpha^t * row_i, stored sparsely.
  struct Sparse {
    std::vector<std::size_t> pos;
    std::vector<Element> val;
  };
  std::vector<Sparse> generators;
  for (std::size_t i = 0; i < basis.rows; ++i) {
    Element scale = Field::one();
    for (unsigned t = 0; t < field.m(); ++t) {
      Sparse sp;
      for (std::size_t j = 0; j < basis.cols; ++j) {
        const Element v = field.mul(scale, basis.at(i, j));
        if (v.code != 0) {
          sp.pos.push_back(j);
          sp.val.push_back(v);
        }
      }
      generators.push_back(std::move(sp));
      scale = field.mul(scale, field.alpha());
    }
  }

  // Odometer over F_p coefficients: bumping digit i by one adds generator i,
  // including on wrap-around since p copies sum to zero.
  std::vector<Element> word(wd.n, Field::zero());
  std::vector<unsigned> digits(generators.size(), 0);
  std::size_t weight = 0;
  std::vector<std::uint64_t> hist(wd.n + 1, 0);
  const unsigned p = field.p();
  while (true) {
    ++hist[weight];
    std::size_t i = 0;
    for (; i < generators.size(); ++i) {
      const Sparse& sp = generators[i];
      for (std::size_t t = 0; t < sp.pos.size(); ++t) {
        Element& c = word[sp.pos[t]];
        const bool was_zero = c.code == 0;
        c = field.add(c, sp.val[t]);
        const bool is_zero = c.code == 0;
        if (was_zero && !is_zero) ++weight;
        if (!was_zero && is_zero) --weight;
      }
      if (++digits[i] < p) break;
      digits[i] = 0;
    }
    if (i == generators.size()) break;
  }
  for (std::size_t w = 0; w <= wd.n; ++w) {
    if (hist[w] != 0) wd.counts[w] = hist[w];
  }
  return wd;
}

TwoWeightReport two_weight_check(unsigned p, unsigned r, unsigned s, const Limits& limits) {
  const Field field = build_field(p, 2 * r, limits);
  const PointMatrix points = build_direct(field, s, limits);
  TwoWeightReport rep;
  rep.p = p;
  rep.r = r;
  rep.s = s;
  rep.spectrum = weight_distribution(field, evaluation_matrix(field, points, 1), limits);
  rep.observed = rep.spectrum.nonzero_weights();

  const BigInt top = ipow(p, static_cast<unsigned long>(r) * (2 * s - 1));
  rep.corrected = {top, top + sign_pow(s - 1) * ipow(p, static_cast<unsigned long>(r) * (s - 1))};
  rep.literal = {BigInt(ipow(p, r) * (2 * s - 1) + sign_pow(s - 1) * ipow(p, s - 1)), top};

  std::set<BigInt> observed;
  for (std::size_t w : rep.observed) observed.insert(BigInt(static_cast<unsigned long>(w)));
  rep.two_weights = rep.observed.size() == 2;
  rep.corrected_matches = observed == rep.corrected;
  rep.literal_matches = observed == rep.literal;
  return rep;
}

TssCodeReport min_weight_vs_tss(unsigned p, unsigned r, unsigned s, unsigned h, const Limits& limits) {
  const Field field = build_field(p, 2 * r, limits);
  const PointMatrix points = all_points(field, s, limits);
  const WeightDistribution wd = weight_distribution(field, evaluation_matrix(field, points, h), limits);
  TssCodeReport rep;
  rep.p = p;
  rep.r = r;
  rep.s = s;
  rep.h = h;
  rep.n = wd.n;
  rep.kdim = wd.kdim;
  rep.min_weight = wd.min_nonzero_weight();
  const BigInt q = field.size();
  rep.bound = BigInt(static_cast<unsigned long>(wd.n)) -
              (h * ipow(q, s - 1) + pi_size(q, static_cast<long>(s) - 2));
  const BigInt mw = static_cast<unsigned long>(rep.min_weight);
  rep.met = mw >= rep.bound;
  rep.equality = mw == rep.bound;
  return rep;
}

}  // namespace diagsurf
