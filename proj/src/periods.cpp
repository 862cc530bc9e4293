#include "lglab/periods.hpp"

#include "lglab/error.hpp"
#include "lglab/linalg.hpp"
#include "lglab/polytope.hpp"

#include <cstdint>
#include <optional>
#include <sstream>
#include <unordered_map>

namespace lglab {

namespace {

// Packs small signed exponent vectors into one 64-bit key with biased fields.
struct KeyCodec {
  int dim = 0;
  int bits = 0;
  std::int64_t bias = 0;

  KeyCodec(int d, long long max_abs) : dim(d) {
    bits = d == 0 ? 0 : 64 / d;
    if (bits > 21) bits = 21;
    bias = d == 0 ? 0 : (std::int64_t{1} << (bits - 1));
    if (d > 0 && max_abs >= bias)
      throw UnsupportedError("period computation: exponent range too large for " + std::to_string(d) +
                             " variables");
  }
  std::uint64_t encode(const std::vector<int>& e) const {
    std::uint64_t k = 0;
    for (int i = 0; i < dim; ++i) k |= static_cast<std::uint64_t>(e[i] + bias) << (bits * i);
    return k;
  }
  std::uint64_t offset(const std::vector<int>& e) const {
    std::uint64_t k = 0;
    for (int i = 0; i < dim; ++i) k += static_cast<std::uint64_t>(static_cast<std::int64_t>(e[i])) << (bits * i);
    return k;
  }
  void decode(std::uint64_t k, std::vector<long long>& out) const {
    std::uint64_t mask = (std::uint64_t{1} << bits) - 1;
    for (int i = 0; i < dim; ++i) out[i] = static_cast<long long>((k >> (bits * i)) & mask) - bias;
  }
};

struct Cell {
  Integer value;
  bool alive;
};

}  // namespace

PeriodSequence period_sequence(const LaurentPolynomial& f, int N) {
  if (f.has_parameters()) throw ParameterError("period sequence requires all parameters to be specialized");
  if (N < 0) throw DomainError("period length must be non-negative");
  PeriodSequence seq;
  seq.source = f.to_string();
  seq.coefficients.assign(N + 1, 0);
  seq.coefficients[0] = 1;
  if (N == 0 || f.is_zero()) return seq;

  int dim = static_cast<int>(f.torus_dimension());
  auto terms = f.terms();
  Integer L = 1;
  for (const auto& [e, c] : terms) mpz_lcm(L.get_mpz_t(), L.get_mpz_t(), c.get_den_mpz_t());
  long long max_abs = 0;
  for (const auto& [e, c] : terms)
    for (int v : e) max_abs = std::max<long long>(max_abs, std::abs(v));

  LatticePolytope P = newton_polytope(f);
  Point origin(dim, 0);
  if (!P.contains(origin)) return seq;

  KeyCodec codec(dim, max_abs * N);
  std::vector<std::pair<std::uint64_t, Integer>> step;
  for (const auto& [e, c] : terms) step.emplace_back(codec.offset(e), Rational(c * Rational(L)).get_num());

  const std::uint64_t zero = codec.encode(std::vector<int>(dim, 0));
  auto pair_sum = [&](const std::unordered_map<std::uint64_t, Cell>& a, const std::unordered_map<std::uint64_t, Cell>& b) {
    const auto& small = a.size() <= b.size() ? a : b;
    const auto& large = a.size() <= b.size() ? b : a;
    Integer s = 0;
    for (const auto& [key, cell] : small) {
      auto it = large.find(2 * zero - key);
      if (it != large.end()) mpz_addmul(s.get_mpz_t(), cell.value.get_mpz_t(), it->second.value.get_mpz_t());
    }
    return s;
  };
  auto store = [&](int j, const Integer& v) {
    Integer den;
    mpz_pow_ui(den.get_mpz_t(), L.get_mpz_t(), static_cast<unsigned long>(j));
    seq.coefficients[j] = Rational(v) / Rational(den);
  };

  // ct(f^(a+b)) = sum_m f^a[m] f^b[-m], so powers up to ceil(N/2) suffice.
  std::unordered_map<std::uint64_t, Cell> prev, cur, next;
  cur.emplace(zero, Cell{1, true});
  std::vector<long long> point(dim);
  int half = (N + 1) / 2;
  for (int j = 1; j <= half; ++j) {
    next.clear();
    next.reserve(cur.size() * 2);
    long long remaining = N - j;
    for (const auto& [key, cell] : cur) {
      for (const auto& [delta, coeff] : step) {
        std::uint64_t k = key + delta;
        auto [it, inserted] = next.try_emplace(k);
        if (inserted) {
          codec.decode(k, point);
          bool ok = true;
          for (const auto& facet : P.facets) {
            long long s = 0;
            for (int i = 0; i < dim; ++i) s -= facet.normal[i] * point[i];
            if (s > remaining * facet.offset) {
              ok = false;
              break;
            }
          }
          it->second.alive = ok;
        }
        if (it->second.alive) mpz_addmul(it->second.value.get_mpz_t(), cell.value.get_mpz_t(), coeff.get_mpz_t());
      }
    }
    for (auto it = next.begin(); it != next.end();) {
      if (!it->second.alive || it->second.value == 0)
        it = next.erase(it);
      else
        ++it;
    }
    prev.swap(cur);
    cur.swap(next);
    store(2 * j - 1, pair_sum(cur, prev));
    if (2 * j <= N) store(2 * j, pair_sum(cur, cur));
  }
  return seq;
}

DifferentialOperator::DifferentialOperator(std::vector<UPoly> coefficients) : p_(std::move(coefficients)) {
  trim();
}

void DifferentialOperator::trim() {
  while (!p_.empty() && p_.back().is_zero()) p_.pop_back();
}

DifferentialOperator DifferentialOperator::theta() { return DifferentialOperator({UPoly(), UPoly::constant(1)}); }

DifferentialOperator DifferentialOperator::multiplier(const UPoly& p) { return DifferentialOperator({p}); }

int DifferentialOperator::degree() const {
  int d = -1;
  for (const auto& p : p_) d = std::max(d, p.degree());
  return d;
}

DifferentialOperator DifferentialOperator::normalized() const {
  if (p_.empty()) return *this;
  Integer g = 0, l = 1;
  for (const auto& p : p_)
    for (const auto& c : p.coeffs()) {
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num_mpz_t());
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    }
  Rational scale(l, g);
  scale.canonicalize();
  const UPoly& lead = p_.back();
  if (lead.coeff(lead.valuation()) < 0) scale = -scale;
  std::vector<UPoly> out;
  for (const auto& p : p_) out.push_back(p * scale);
  return DifferentialOperator(std::move(out));
}

DifferentialOperator operator+(const DifferentialOperator& a, const DifferentialOperator& b) {
  std::vector<UPoly> out(std::max(a.p_.size(), b.p_.size()));
  for (std::size_t i = 0; i < a.p_.size(); ++i) out[i] = out[i] + a.p_[i];
  for (std::size_t i = 0; i < b.p_.size(); ++i) out[i] = out[i] + b.p_[i];
  return DifferentialOperator(std::move(out));
}

DifferentialOperator operator-(const DifferentialOperator& a, const DifferentialOperator& b) {
  std::vector<UPoly> nb;
  for (const auto& p : b.p_) nb.push_back(-p);
  return a + DifferentialOperator(std::move(nb));
}

DifferentialOperator operator*(const DifferentialOperator& a, const DifferentialOperator& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<UPoly> out(a.p_.size() + b.p_.size() - 1);
  for (std::size_t i = 0; i < a.p_.size(); ++i) {
    if (a.p_[i].is_zero()) continue;
    for (std::size_t e = 0; e < b.p_.size(); ++e) {
      const UPoly& q = b.p_[e];
      if (q.is_zero()) continue;
      // D^i q = sum_k binom(i,k) (theta^k q) D^(i-k)
      for (std::size_t k = 0; k <= i; ++k) {
        std::vector<Rational> tq(q.coeffs().size());
        for (std::size_t c = 0; c < tq.size(); ++c) {
          Rational w = 1;
          for (std::size_t m = 0; m < k; ++m) w *= static_cast<long>(c);
          tq[c] = q.coeffs()[c] * w;
        }
        UPoly term = a.p_[i] * UPoly(std::move(tq)) * Rational(binomial(i, k));
        out[i - k + e] = out[i - k + e] + term;
      }
    }
  }
  return DifferentialOperator(std::move(out));
}

std::string DifferentialOperator::to_string() const {
  if (p_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = order(); i >= 0; --i) {
    const UPoly& p = p_[i];
    if (p.is_zero()) continue;
    std::string body = p.to_string("t");
    bool single = p.coeffs().size() - static_cast<std::size_t>(p.valuation()) == 1;
    bool neg = single && body[0] == '-';
    if (neg) body = body.substr(1);
    os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
    first = false;
    std::string dpart = i == 0 ? "" : (i == 1 ? "D" : "D^" + std::to_string(i));
    if (!single) {
      os << '(' << body << ')';
      if (!dpart.empty()) os << '*' << dpart;
    } else if (body == "1" && !dpart.empty()) {
      os << dpart;
    } else {
      os << body;
      if (!dpart.empty()) os << '*' << dpart;
    }
  }
  return os.str();
}

PeriodSequence apply_operator(const DifferentialOperator& L, const PeriodSequence& seq) {
  PeriodSequence out;
  out.source = "(" + L.to_string() + ") applied to " + seq.source;
  std::size_t n = seq.length();
  out.coefficients.assign(n, 0);
  for (std::size_t m = 0; m < n; ++m) {
    Rational s = 0;
    for (int i = 0; i <= L.order(); ++i) {
      const UPoly& p = L.coefficient(i);
      for (int k = 0; k <= p.degree(); ++k) {
        if (static_cast<std::size_t>(k) > m || p.coeff(k) == 0) continue;
        std::size_t j = m - k;
        if (seq.coefficients[j] == 0) continue;
        Rational w = 1;
        for (int e = 0; e < i; ++e) w *= static_cast<long>(j);
        s += p.coeff(k) * w * seq.coefficients[j];
      }
    }
    out.coefficients[m] = s;
  }
  return out;
}

bool annihilates(const DifferentialOperator& L, const PeriodSequence& seq) {
  for (const auto& c : apply_operator(L, seq).coefficients)
    if (c != 0) return false;
  return true;
}

int required_terms(const PicardFuchsOptions& o) {
  return (o.max_order + 1) * (o.max_degree + 1) + o.guard + o.max_degree;
}

namespace {

// Rows m = 0..last of the recurrence sum p_{i,k} (m-k)^i c_{m-k} = 0 with
// unknowns ordered by (i, k).
IntMatrix recurrence_rows(const PeriodSequence& seq, int r, int d, int last) {
  Matrix rows;
  for (int m = 0; m <= last; ++m) {
    std::vector<Rational> row;
    row.reserve((r + 1) * (d + 1));
    for (int i = 0; i <= r; ++i)
      for (int k = 0; k <= d; ++k) {
        if (k > m) {
          row.emplace_back(0);
          continue;
        }
        Rational w = seq.coefficients[m - k];
        for (int e = 0; e < i; ++e) w *= (m - k);
        row.push_back(w);
      }
    rows.push_back(std::move(row));
  }
  return integer_rows(rows);
}

DifferentialOperator from_vector(const std::vector<Integer>& v, int r, int d) {
  std::vector<UPoly> p;
  for (int i = 0; i <= r; ++i) {
    std::vector<Rational> c;
    for (int k = 0; k <= d; ++k) c.emplace_back(v[i * (d + 1) + k]);
    p.emplace_back(std::move(c));
  }
  return DifferentialOperator(std::move(p));
}

}  // namespace

bool has_annihilator(const PeriodSequence& seq, int order, int degree, int guard) {
  int last = static_cast<int>(seq.length()) - 1 - guard;
  if (last < 0) return true;
  return !nullspace(recurrence_rows(seq, order, degree, last)).empty();
}

DifferentialOperator find_picard_fuchs(const PeriodSequence& seq, const PicardFuchsOptions& o) {
  if (o.max_order < 1 || o.max_degree < 0 || o.guard < 0)
    throw DomainError("search bounds must satisfy max_order >= 1, max_degree >= 0, guard >= 0");
  int need = required_terms(o);
  if (static_cast<int>(seq.length()) < need)
    throw DomainError("period sequence has " + std::to_string(seq.length()) + " terms; bounds (" +
                      std::to_string(o.max_order) + ", " + std::to_string(o.max_degree) + ", guard " +
                      std::to_string(o.guard) + ") need " + std::to_string(need));
  int last = static_cast<int>(seq.length()) - 1 - o.guard;
  for (int r = 1; r <= o.max_order; ++r)
    for (int d = 0; d <= o.max_degree; ++d) {
      auto basis = nullspace(recurrence_rows(seq, r, d, last));
      for (const auto& v : basis) {
        DifferentialOperator L = from_vector(v, r, d);
        if (L.order() != r) continue;
        if (annihilates(L, seq)) return L.normalized();
      }
    }
  throw NotFoundError("no annihilating operator with order <= " + std::to_string(o.max_order) +
                          " and degree <= " + std::to_string(o.max_degree),
                      o.max_order, o.max_degree);
}

StagedResult search_picard_fuchs(const LaurentPolynomial& f, const std::vector<PicardFuchsOptions>& stages,
                                 int period_length) {
  if (stages.empty()) throw DomainError("no search stages given");
  std::optional<PeriodSequence> shared;
  if (period_length > 0) shared = period_sequence(f, period_length);
  const PicardFuchsOptions* last = nullptr;
  std::size_t terms = shared ? shared->length() : 0;
  for (const auto& stage : stages) {
    PeriodSequence seq = shared ? *shared : period_sequence(f, required_terms(stage) - 1);
    terms = seq.length();
    if (static_cast<int>(seq.length()) < required_terms(stage)) continue;
    last = &stage;
    try {
      auto op = find_picard_fuchs(seq, stage);
      return {std::move(op), std::move(seq), stage};
    } catch (const NotFoundError&) {
    }
  }
  if (!last)
    throw DomainError("period sequence of " + std::to_string(terms) + " terms is too short for every search stage");
  throw NotFoundError("no annihilating operator with order <= " + std::to_string(last->max_order) + " and degree <= " +
                          std::to_string(last->max_degree) + " from " + std::to_string(terms) + " terms",
                      last->max_order, last->max_degree);
}

}  // namespace lglab
