#include "rbs/linfty.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "rbs/signs.hpp"

namespace rbs {

std::string to_string(Part p) {
  switch (p) {
    case Part::Alg: return "alg";
    case Part::RboR: return "rbo_r";
    case Part::RboS: return "rbo_s";
  }
  return "?";
}

Part parse_part(const std::string& s) {
  if (s == "alg") return Part::Alg;
  if (s == "rbo_r") return Part::RboR;
  if (s == "rbo_s") return Part::RboS;
  throw std::invalid_argument("unknown cochain part: " + s);
}

LinftyContext::LinftyContext(SpacePtr v_space) : v(std::move(v_space)) {
  if (!v) throw std::invalid_argument("LinftyContext: null space");
  sv = make_space(v->shifted(1));
}

CochainElement CochainElement::single(Part p, MultiMap m) {
  CochainElement e;
  e.add(p, m);
  return e;
}

void CochainElement::add(Part p, const MultiMap& m, const Scalar& c) {
  if (m.is_zero() || rbs::is_zero(c)) return;
  Key k{p, m.arity()};
  auto it = comps_.find(k);
  if (it == comps_.end()) {
    comps_.emplace(k, m * c);
    return;
  }
  it->second.add_scaled(m, c);
  if (it->second.is_zero()) comps_.erase(it);
}

void CochainElement::add_scaled(const CochainElement& o, const Scalar& c) {
  for (const auto& [k, m] : o.comps_) add(k.first, m, c);
}

std::optional<int> CochainElement::degree() const {
  std::optional<int> d;
  for (const auto& [k, m] : comps_) {
    if (d && *d != m.degree()) throw std::invalid_argument("CochainElement: inhomogeneous element");
    d = m.degree();
  }
  return d;
}

int CochainElement::max_arity(Part p) const {
  int a = 0;
  for (const auto& [k, m] : comps_)
    if (k.first == p) a = std::max(a, k.second);
  return a;
}

bool operator==(const CochainElement& a, const CochainElement& b) {
  if (a.comps_.size() != b.comps_.size()) return false;
  for (const auto& [k, m] : a.comps_) {
    auto it = b.comps_.find(k);
    if (it == b.comps_.end() || !(it->second == m)) return false;
  }
  return true;
}

namespace {

// F{H}: sum over the inputs of F.
MultiMap brace1(const MultiMap& F, const MultiMap& H) {
  MultiMap out(F.in_space(), F.out_space(), F.arity() + H.arity() - 1, F.degree() + H.degree());
  for (int i = 1; i <= F.arity(); ++i) out += insert(F, i, H);
  return out;
}

MultiMap susp(const LinftyContext& c, const MultiMap& g) { return g.relabeled(c.sv, g.degree() + 1); }
MultiMap desusp(const LinftyContext& c, const MultiMap& F) { return F.relabeled(c.v, F.degree() - 1); }

struct Acc {
  std::optional<MultiMap> m;
  void add(const MultiMap& x, const Scalar& c) {
    if (!m) m = x * c;
    else m->add_scaled(x, c);
  }
};

Permutation to_perm(const std::vector<int>& zero_based) {
  Permutation p(zero_based.size());
  for (std::size_t i = 0; i < p.size(); ++i) p[i] = zero_based[i] + 1;
  return p;
}

int chi0(const std::vector<int>& sig, const DegreeSeq& degs) { return chi_sign(to_perm(sig), degs); }

std::vector<int> iota(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 0);
  return v;
}

int part_rank(Part p) { return static_cast<int>(p); }

}  // namespace

MultiMap l2_alg(const MultiMap& sf, const MultiMap& sh) {
  MultiMap out = brace1(sf, sh);
  out.add_scaled(brace1(sh, sf), -sign_pow(static_cast<long>(sf.degree()) * sh.degree()));
  return out;
}

std::vector<Component> l_canonical(const LinftyContext& ctx, const std::vector<Component>& args) {
  std::vector<Component> out;
  if (args.size() == 2 && args[0].part == Part::Alg && args[1].part == Part::Alg) {
    MultiMap b = l2_alg(args[0].map, args[1].map);
    if (!b.is_zero()) out.push_back({Part::Alg, std::move(b)});
    return out;
  }
  if (args.size() < 2 || args[0].part != Part::Alg) return out;
  const int n = static_cast<int>(args.size()) - 1;
  for (int k = 1; k <= n; ++k)
    if (args[k].part == Part::Alg) return out;
  const MultiMap& sf = args[0].map;
  if (sf.arity() != n) return out;
  std::vector<MultiMap> gs, hs;
  for (int k = 1; k <= n; ++k) (args[k].part == Part::RboR ? gs : hs).push_back(args[k].map);
  const int j = static_cast<int>(gs.size());
  const long fdeg = sf.degree() - 1;
  const MultiMap f = desusp(ctx, sf);

  if (j == n || j == 0) {
    const auto& xs = j == n ? gs : hs;
    std::vector<MultiMap> sx;
    DegreeSeq degs;
    for (const auto& x : xs) {
      sx.push_back(susp(ctx, x));
      degs.push_back(x.degree());
    }
    Acc acc;
    auto sig = iota(n);
    do {
      long e = n * (fdeg + 1);
      for (int k = 0; k + 1 < n; ++k)
        for (int jj = 0; jj <= k; ++jj) e += degs[sig[jj]];
      std::vector<const MultiMap*> all, rest;
      for (int k = 0; k < n; ++k) all.push_back(&sx[sig[k]]);
      for (int k = 1; k < n; ++k) rest.push_back(&sx[sig[k]]);
      if (j == n) rest.push_back(nullptr);
      else rest.insert(rest.begin(), nullptr);
      MultiMap t = full_compose(f, all);
      MultiMap inner = full_compose(sf, rest);
      t.add_scaled(desusp(ctx, brace1(sx[sig[0]], inner)), -sign_pow((degs[sig[0]] + 1) * (fdeg + 1)));
      acc.add(t, chi0(sig, degs) * sign_pow(e));
    } while (std::next_permutation(sig.begin(), sig.end()));
    if (acc.m && !acc.m->is_zero()) out.push_back({j == n ? Part::RboR : Part::RboS, std::move(*acc.m)});
    return out;
  }

  std::vector<MultiMap> sg, sh;
  DegreeSeq gd, hd;
  for (const auto& g : gs) {
    sg.push_back(susp(ctx, g));
    gd.push_back(g.degree());
  }
  for (const auto& h : hs) {
    sh.push_back(susp(ctx, h));
    hd.push_back(h.degree());
  }
  const int m = n - j;
  const long Gs = std::accumulate(gd.begin(), gd.end(), 0L);
  Acc A, B;
  auto s1 = iota(j);
  do {
    long gsum = 0;
    for (int k = 1; k < j; ++k)
      for (int ss = 0; ss < k; ++ss) gsum += gd[s1[ss]];
    auto s2 = iota(m);
    do {
      const Scalar base = chi0(s1, gd) * chi0(s2, hd);
      long hsum = 0;
      for (int k = 1; k < m; ++k)
        for (int ss = 0; ss < k; ++ss) hsum += hd[s2[ss]];
      const long common = 1 + n * (fdeg + 1) + hsum + Gs * m + gsum;

      std::vector<const MultiMap*> inA;
      for (int k = 1; k < j; ++k) inA.push_back(&sg[s1[k]]);
      inA.push_back(nullptr);
      for (int k = 0; k < m; ++k) inA.push_back(&sh[s2[k]]);
      const long e3 = common + (gd[s1[0]] + 1) * (fdeg + 1);
      A.add(desusp(ctx, brace1(sg[s1[0]], full_compose(sf, inA))), base * sign_pow(e3));

      std::vector<const MultiMap*> inB;
      for (int k = 0; k < j; ++k) inB.push_back(&sg[s1[k]]);
      inB.push_back(nullptr);
      for (int k = 1; k < m; ++k) inB.push_back(&sh[s2[k]]);
      const long e4 = common + (hd[s2[0]] + 1) * (fdeg + Gs + j + 1);
      B.add(desusp(ctx, brace1(sh[s2[0]], full_compose(sf, inB))), base * sign_pow(e4));
    } while (std::next_permutation(s2.begin(), s2.end()));
  } while (std::next_permutation(s1.begin(), s1.end()));
  if (A.m && !A.m->is_zero()) out.push_back({Part::RboR, std::move(*A.m)});
  if (B.m && !B.m->is_zero()) out.push_back({Part::RboS, std::move(*B.m)});
  return out;
}

std::vector<Component> l_symmetrized(const LinftyContext& ctx, const std::vector<Component>& args) {
  const int n = static_cast<int>(args.size());
  auto idx = iota(n);
  std::stable_sort(idx.begin(), idx.end(),
                   [&](int a, int b) { return part_rank(args[a].part) < part_rank(args[b].part); });
  DegreeSeq degs;
  for (const auto& a : args) degs.push_back(a.map.degree());
  const int sg = chi0(idx, degs);
  std::vector<Component> sorted;
  for (int i : idx) sorted.push_back(args[i]);
  auto out = l_canonical(ctx, sorted);
  for (auto& c : out) c.map *= sg;
  return out;
}

CochainElement l_n(const LinftyContext& ctx, const std::vector<CochainElement>& args) {
  CochainElement out;
  std::vector<Component> cur;
  std::vector<const std::map<CochainElement::Key, MultiMap>*> comps;
  for (const auto& a : args) {
    if (a.is_zero()) return out;
    comps.push_back(&a.components());
  }
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == args.size()) {
      for (auto& c : l_symmetrized(ctx, cur)) out.add(c.part, c.map);
      return;
    }
    for (const auto& [k, m] : *comps[i]) {
      cur.push_back({k.first, m});
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

JacobiResult jacobi_residual(const LinftyContext& ctx, const std::vector<CochainElement>& xs) {
  JacobiResult r;
  const int n = static_cast<int>(xs.size());
  DegreeSeq degs;
  for (const auto& x : xs) {
    if (x.is_zero()) return r;
    degs.push_back(*x.degree());
  }
  for (int i = 1; i <= n; ++i) {
    const int j = n + 1 - i;
    for (const auto& sig : unshuffles(i, n)) {
      std::vector<CochainElement> in;
      for (int k = 0; k < i; ++k) in.push_back(xs[sig[k] - 1]);
      CochainElement inner = l_n(ctx, in);
      if (inner.is_zero()) continue;
      std::vector<CochainElement> outer_args{inner};
      for (int k = i; k < n; ++k) outer_args.push_back(xs[sig[k] - 1]);
      CochainElement outer = l_n(ctx, outer_args);
      if (outer.is_zero()) continue;
      ++r.nonzero_terms;
      r.residual.add_scaled(outer, chi_sign(sig, degs) * sign_pow(static_cast<long>(i) * (j - 1)));
    }
  }
  return r;
}

namespace {

std::uint64_t pick(std::mt19937_64& rng, std::uint64_t k) { return rng() % k; }
double unit_real(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

const std::vector<Scalar>& value_set() {
  static const std::vector<Scalar> v{Scalar(-2), Scalar(-1), Scalar(0), Scalar(1), Scalar(2), Scalar(1, 2)};
  return v;
}

template <class F>
void for_each_tuple(int dim, int arity, F&& f) {
  std::vector<int> x(arity, 0);
  while (true) {
    f(x);
    int k = 0;
    while (k < arity && ++x[k] == dim) x[k++] = 0;
    if (k == arity) return;
  }
}

}  // namespace

std::pair<int, int> feasible_degrees(const LinftyContext& ctx, Part p, int arity) {
  const auto in = ctx.sv->degrees();
  const auto outd = ctx.out_space(p)->degrees();
  if (in.empty()) throw std::invalid_argument("feasible_degrees: empty space");
  const int imin = *std::min_element(in.begin(), in.end()), imax = *std::max_element(in.begin(), in.end());
  const int omin = *std::min_element(outd.begin(), outd.end()), omax = *std::max_element(outd.begin(), outd.end());
  return {omin - arity * imax, omax - arity * imin};
}

MultiMap random_component(const LinftyContext& ctx, Part p, int arity, int degree, std::mt19937_64& rng,
                          double density) {
  const SpacePtr& out = ctx.out_space(p);
  MultiMap m(ctx.sv, out, arity, degree);
  for_each_tuple(static_cast<int>(ctx.sv->dim()), arity, [&](const std::vector<int>& xs) {
    int d = degree;
    for (int x : xs) d += ctx.sv->degree(x);
    for (std::size_t o = 0; o < out->dim(); ++o) {
      if (out->degree(o) != d || unit_real(rng) >= density) continue;
      const Scalar& c = value_set()[pick(rng, value_set().size())];
      if (!rbs::is_zero(c)) m.add(xs, static_cast<int>(o), c);
    }
  });
  return m;
}

int JacobiReport::nontrivial() const {
  return static_cast<int>(std::count_if(cases.begin(), cases.end(), [](const auto& c) { return c.nonzero_terms > 0; }));
}

int JacobiReport::failures() const {
  return static_cast<int>(std::count_if(cases.begin(), cases.end(), [](const auto& c) { return !c.ok; }));
}

JacobiReport check_generalized_jacobi(int dim, int truncation, int trials, std::uint64_t seed) {
  if (dim < 1 || truncation < 1 || trials < 0) throw std::invalid_argument("check_generalized_jacobi: bad parameters");
  std::vector<int> degs(dim);
  std::iota(degs.begin(), degs.end(), 0);
  LinftyContext ctx(make_space(GradedSpace::from_degrees(degs)));
  using P = Part;
  static const std::vector<std::vector<Part>> shapes{
      {P::Alg, P::Alg, P::Alg},          {P::Alg, P::RboR},
      {P::Alg, P::RboS},                 {P::Alg, P::Alg, P::RboR},
      {P::Alg, P::Alg, P::RboS},         {P::Alg, P::RboR, P::RboS},
      {P::Alg, P::Alg, P::RboR, P::RboR}, {P::Alg, P::Alg, P::RboR, P::RboS},
      {P::Alg, P::Alg, P::RboS, P::RboS}, {P::Alg, P::Alg, P::Alg, P::RboR},
      {P::Alg, P::RboR, P::RboR, P::RboS}, {P::Alg, P::RboR, P::RboS, P::RboS},
  };
  std::mt19937_64 rng(seed);
  JacobiReport rep;
  rep.dim = dim;
  rep.truncation = truncation;
  rep.trials = trials;
  rep.seed = seed;
  for (int t = 0; t < trials; ++t) {
    const auto& shape = shapes[pick(rng, shapes.size())];
    std::vector<CochainElement> xs;
    std::ostringstream name;
    for (Part p : shape) {
      const int ar = 1 + static_cast<int>(pick(rng, static_cast<std::uint64_t>(truncation)));
      auto [lo, hi] = feasible_degrees(ctx, p, ar);
      const int deg = lo + static_cast<int>(pick(rng, static_cast<std::uint64_t>(hi - lo + 1)));
      MultiMap m(ctx.sv, ctx.out_space(p), ar, deg);
      for (int attempt = 0; attempt < 50 && m.is_zero(); ++attempt) m = random_component(ctx, p, ar, deg, rng);
      if (name.tellp() > 0) name << ' ';
      name << to_string(p) << ar << '[' << deg << ']';
      xs.push_back(CochainElement::single(p, m));
    }
    JacobiResult jr = jacobi_residual(ctx, xs);
    rep.cases.push_back({name.str(), jr.nonzero_terms, jr.ok()});
  }
  return rep;
}

namespace {

Scalar factorial(int n) {
  Scalar f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

}  // namespace

CochainElement mc_residual(const LinftyContext& ctx, const CochainElement& alpha) {
  CochainElement res;
  if (alpha.is_zero()) return res;
  if (*alpha.degree() != -1) throw std::invalid_argument("mc_residual: element must have degree -1");
  const int N = std::max(2, alpha.max_arity(Part::Alg) + 1);
  for (int n = 2; n <= N; ++n) res.add_scaled(l_n(ctx, std::vector<CochainElement>(n, alpha)), 1 / factorial(n));
  return res;
}

bool is_mc(const LinftyContext& ctx, const CochainElement& alpha) { return mc_residual(ctx, alpha).is_zero(); }

CochainElement twist(const LinftyContext& ctx, const CochainElement& alpha, const CochainElement& x) {
  if (!is_mc(ctx, alpha)) throw std::invalid_argument("twist: element is not Maurer-Cartan");
  CochainElement out;
  if (alpha.is_zero() || x.is_zero()) return out;
  const int N = std::max(alpha.max_arity(Part::Alg), x.max_arity(Part::Alg)) + 1;
  for (int n = 1; n <= N; ++n) {
    std::vector<CochainElement> args(n, alpha);
    args.push_back(x);
    out.add_scaled(l_n(ctx, args), Scalar(sign_pow(static_cast<long>(n) * (n + 1) / 2)) / factorial(n));
  }
  return out;
}

std::vector<CochainElement> basis_cochains(const LinftyContext& ctx, int max_arity) {
  std::vector<CochainElement> out;
  for (Part p : {Part::Alg, Part::RboR, Part::RboS}) {
    const SpacePtr& o = ctx.out_space(p);
    for (int ar = 1; ar <= max_arity; ++ar)
      for_each_tuple(static_cast<int>(ctx.sv->dim()), ar, [&](const std::vector<int>& xs) {
        int in = 0;
        for (int x : xs) in += ctx.sv->degree(x);
        for (std::size_t k = 0; k < o->dim(); ++k) {
          MultiMap m(ctx.sv, o, ar, o->degree(k) - in);
          m.add(xs, static_cast<int>(k), 1);
          out.push_back(CochainElement::single(p, m));
        }
      });
  }
  return out;
}

namespace {

void require_degree_zero(const GradedSpace& v) {
  for (int d : v.degrees())
    if (d != 0) throw std::invalid_argument("suspension dictionary: V must be concentrated in degree 0");
}

}  // namespace

CochainElement encode_rbs(const LinftyContext& ctx, const MultiMap& mu, const MultiMap& R, const MultiMap& S) {
  require_degree_zero(*ctx.v);
  if (mu.arity() != 2 || R.arity() != 1 || S.arity() != 1) throw std::invalid_argument("encode_rbs: bad arities");
  if (mu.degree() != 0 || R.degree() != 0 || S.degree() != 0) throw std::invalid_argument("encode_rbs: degree-0 maps expected");
  CochainElement a;
  a.add(Part::Alg, mu.with_input_space(ctx.sv, -2).relabeled(ctx.sv, -1));
  a.add(Part::RboR, R.with_input_space(ctx.sv, -1));
  a.add(Part::RboS, S.with_input_space(ctx.sv, -1));
  return a;
}

DecodedRbs decode_rbs(const LinftyContext& ctx, const CochainElement& alpha) {
  require_degree_zero(*ctx.v);
  DecodedRbs d{MultiMap(ctx.v, ctx.v, 2, 0), MultiMap(ctx.v, ctx.v, 1, 0), MultiMap(ctx.v, ctx.v, 1, 0)};
  for (const auto& [k, m] : alpha.components()) {
    if (k == CochainElement::Key{Part::Alg, 2}) d.mu = m.relabeled(ctx.v, -2).with_input_space(ctx.v, 0);
    else if (k == CochainElement::Key{Part::RboR, 1}) d.R = m.with_input_space(ctx.v, 0);
    else if (k == CochainElement::Key{Part::RboS, 1}) d.S = m.with_input_space(ctx.v, 0);
    else throw std::invalid_argument("decode_rbs: component " + to_string(k.first) + std::to_string(k.second) + " is not part of a Rota-Baxter system");
  }
  return d;
}

}  // namespace rbs
