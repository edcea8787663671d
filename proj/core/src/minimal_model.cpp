#include "rbs/minimal_model.hpp"

#include <stdexcept>

namespace rbs {

long SignExponents::alpha(int k, const std::vector<int>& l) {
  long e = 1;
  for (int j = 1; j <= k; ++j) e += static_cast<long>(k - j) * (l[j - 1] - 1);
  return e;
}

long SignExponents::beta(int p, int j, int i, const std::vector<int>& r) {
  long tail = 0;
  for (int t = 2; t <= p; ++t) tail += r[t - 1] - 1;
  long e = 1 + i + (p + tail) * (r[0] - i);
  for (int t = 2; t <= j; ++t) e += r[t - 1] - 1;
  for (int t = 2; t <= p; ++t) e += static_cast<long>(r[t - 1] - 1) * (p - t);
  return e;
}

long SignExponents::delta(int k, const std::vector<int>& l) {
  long e = static_cast<long>(k) * (k - 1) / 2;
  for (int j = 1; j <= k; ++j) e += static_cast<long>(k - j) * l[j - 1];
  return e;
}

long SignExponents::eta(int p, int j, int i, int k, const std::vector<int>& r) {
  long tail = 0;
  for (int t = 2; t <= p; ++t) tail += r[t - 1] - 1;
  long e = i + (p + tail) * k;
  for (int t = 2; t <= j; ++t) e += r[t - 1] - 1;
  for (int t = 2; t <= p; ++t) e += static_cast<long>(r[t - 1] - 1) * (p - t);
  return e;
}

const char* SignExponents::gamma_formula() {
  return "sum_{j=1}^{p-1} (q-k) r_k + p - 1 + ...  (indices q, k unbound; not evaluated)";
}

std::vector<std::vector<int>> compositions(int n, int k) {
  std::vector<std::vector<int>> out;
  if (k <= 0 || n < k) return out;
  std::vector<int> c(k, 1);
  c[k - 1] = n - (k - 1);
  // Enumerate in lexicographic order by walking the first k-1 parts.
  std::function<void(int, int)> rec = [&](int pos, int rest) {
    if (pos == k - 1) {
      c[pos] = rest;
      out.push_back(c);
      return;
    }
    for (int a = 1; a <= rest - (k - 1 - pos); ++a) {
      c[pos] = a;
      rec(pos + 1, rest - a);
    }
  };
  rec(0, n);
  return out;
}

OperadElement extend_derivation(const GeneratorRule& d, const OperadElement& e) {
  OperadElement r;
  std::vector<const TreeMonomial*> kids;
  std::vector<TreeMonomial> kid_store;
  for (const auto& [t, c] : e.terms()) {
    const auto& tok = t.tokens();
    int prefix = 0;
    for (std::size_t pos = 0; pos < tok.size(); ++pos) {
      if (tok[pos] == TreeMonomial::kLeaf) continue;
      Generator g = TreeMonomial::decode(tok[pos]);
      OperadElement dg = d(g);
      if (!dg.is_zero()) {
        auto ch = t.children(pos);
        kid_store.clear();
        kid_store.reserve(ch.size());
        kids.assign(ch.size(), nullptr);
        for (std::size_t a = 0; a < ch.size(); ++a) {
          if (!t.is_leaf_at(ch[a])) {
            kid_store.push_back(t.subtree(ch[a]));
          }
        }
        for (std::size_t a = 0, s = 0; a < ch.size(); ++a)
          if (!t.is_leaf_at(ch[a])) kids[a] = &kid_store[s++];
        const std::size_t end = t.subtree_end(pos);
        const Scalar pre = c * sign_pow(prefix);
        for (const auto& [td, cd] : dg.terms()) {
          Graft gr = graft(td, kids);
          std::vector<TreeMonomial::Token> out(tok.begin(), tok.begin() + static_cast<long>(pos));
          out.insert(out.end(), gr.tree.tokens().begin(), gr.tree.tokens().end());
          out.insert(out.end(), tok.begin() + static_cast<long>(end), tok.end());
          r.add_term(TreeMonomial::from_tokens(std::move(out)), pre * cd * gr.sign);
        }
      }
      prefix += g.degree;
    }
  }
  return r;
}

const OperadElement& Derivation::on_generator(const Generator& g) const {
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = cache_.find(g);
    if (it != cache_.end()) return it->second;
  }
  OperadElement v = rule_(g);
  std::lock_guard<std::mutex> lock(mu_);
  return cache_.try_emplace(g, std::move(v)).first->second;
}

OperadElement Derivation::operator()(const OperadElement& e) const {
  return extend_derivation([this](const Generator& g) { return on_generator(g); }, e);
}

GeneratorRule Derivation::rule() const {
  return [this](const Generator& g) { return on_generator(g); };
}

namespace {

OperadElement gen(char f, int n) { return OperadElement::generator(Generator::builtin(f, n)); }

OperadElement diff_m(int n) {
  OperadElement r;
  for (int j = 2; j <= n - 1; ++j)
    for (int i = 1; i <= n - j + 1; ++i)
      r.add_scaled(compose_at(gen('m', n - j + 1), i, gen('m', j)), sign_pow(i + j * (n - i)));
  return r;
}

OperadElement diff_rs(char f, int n) {
  OperadElement r;
  for (int k = 2; k <= n; ++k)
    for (const auto& l : compositions(n, k)) {
      std::vector<std::optional<OperadElement>> args;
      for (int x : l) args.emplace_back(gen(f, x));
      r.add_scaled(full_compose(gen('m', k), args), sign_pow(SignExponents::alpha(k, l)));
    }
  for (int p = 2; p <= n; ++p)
    for (const auto& rs : compositions(n, p))
      for (int j = 1; j <= p; ++j) {
        std::vector<std::optional<OperadElement>> args;
        for (int t = 2; t <= j; ++t) args.emplace_back(gen('R', rs[t - 1]));
        args.emplace_back(std::nullopt);
        for (int t = j + 1; t <= p; ++t) args.emplace_back(gen('S', rs[t - 1]));
        OperadElement inner = full_compose(gen('m', p), args);
        for (int i = 1; i <= rs[0]; ++i)
          r.add_scaled(compose_at(gen(f, rs[0]), i, inner), sign_pow(SignExponents::beta(p, j, i, rs)));
      }
  return r;
}

OperadElement diff_x(int n, int lo, int hi) {
  OperadElement r;
  for (int j = lo; j <= hi; ++j) r.add_scaled(brace(gen('x', n - j + 1), {gen('x', j)}), Scalar(-1));
  return r;
}

OperadElement diff_yz(char f, int n, int lo) {
  OperadElement r;
  for (int k = lo; k <= n; ++k)
    for (const auto& rs : compositions(n, k)) {
      std::vector<OperadElement> args;
      for (int x : rs) args.push_back(gen(f, x));
      r.add_scaled(brace(gen('x', k), args), Scalar(-1));
    }
  for (int p = lo; p <= n; ++p)
    for (const auto& rs : compositions(n, p))
      for (int j = 1; j <= p; ++j) {
        std::vector<std::optional<OperadElement>> args;
        for (int t = 2; t <= j; ++t) args.emplace_back(gen('y', rs[t - 1]));
        args.emplace_back(std::nullopt);
        for (int t = j + 1; t <= p; ++t) args.emplace_back(gen('z', rs[t - 1]));
        r += brace(gen(f, rs[0]), {full_compose(gen('x', p), args)});
      }
  return r;
}

}  // namespace

OperadElement diff_mrs(const Generator& g) {
  switch (g.family) {
    case 'm': return diff_m(g.arity);
    case 'R': case 'S': return diff_rs(g.family, g.arity);
    default: throw std::invalid_argument("diff_mrs: unsupported family " + g.name());
  }
}

OperadElement diff_xyz(const Generator& g, XyzRange range) {
  const bool ext = range == XyzRange::Extended;
  switch (g.family) {
    case 'x': return ext ? diff_x(g.arity, 1, g.arity) : diff_x(g.arity, 2, g.arity - 1);
    case 'y': case 'z': return diff_yz(g.family, g.arity, ext ? 1 : 2);
    default: throw std::invalid_argument("diff_xyz: unsupported family " + g.name());
  }
}

bool DSquaredReport::ok() const {
  for (const auto& c : cases)
    if (!c.ok()) return false;
  return true;
}

std::vector<Generator> presentation_generators(Presentation p, int max_arity) {
  std::vector<Generator> gs;
  const char* fams = p == Presentation::Mrs ? "mRS" : "xyz";
  for (const char* f = fams; *f; ++f) {
    int lo = (*f == 'm' || *f == 'x') ? 2 : 1;
    for (int n = lo; n <= max_arity; ++n) gs.push_back(Generator::builtin(*f, n));
  }
  return gs;
}

DSquaredReport check_d_squared(Presentation p, int max_arity) {
  if (max_arity < 2) throw std::invalid_argument("check_d_squared: max_arity must be >= 2");
  Derivation d(p == Presentation::Mrs ? GeneratorRule(diff_mrs)
                                      : GeneratorRule([](const Generator& g) { return diff_xyz(g); }));
  DSquaredReport rep{p, max_arity, {}};
  for (const auto& g : presentation_generators(p, max_arity)) {
    const OperadElement& dg = d.on_generator(g);
    rep.cases.push_back({g, dg, d(dg)});
  }
  return rep;
}

std::string to_string(Presentation p) { return p == Presentation::Mrs ? "mrs" : "xyz"; }

}  // namespace rbs
