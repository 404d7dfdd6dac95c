#include "vpq/modules.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <set>
#include <stdexcept>

namespace vpq {

std::string family_name(Family f) {
  switch (f) {
    case Family::Mab: return "mab";
    case Family::ExcAlpha: return "alpha";
    case Family::ExcAlphaPrime: return "alphap";
    case Family::ExcBeta: return "beta";
    case Family::ExcBetaPrime: return "betap";
    case Family::Table: return "table";
  }
  return "?";
}

CoefficientRule CoefficientRule::mab(Scalar a, Scalar b) {
  CoefficientRule r;
  r.family_ = Family::Mab;
  r.params_ = {std::move(a), std::move(b)};
  return r;
}

CoefficientRule CoefficientRule::exc_alpha(Scalar alpha) {
  CoefficientRule r;
  r.family_ = Family::ExcAlpha;
  r.params_ = {std::move(alpha)};
  return r;
}

CoefficientRule CoefficientRule::exc_alpha_prime(Scalar alpha_prime) {
  CoefficientRule r;
  r.family_ = Family::ExcAlphaPrime;
  r.params_ = {std::move(alpha_prime)};
  return r;
}

CoefficientRule CoefficientRule::exc_beta(Scalar beta) {
  CoefficientRule r;
  r.family_ = Family::ExcBeta;
  r.params_ = {std::move(beta)};
  return r;
}

CoefficientRule CoefficientRule::exc_beta_prime(Scalar beta_prime, bool adjudicated) {
  CoefficientRule r;
  r.family_ = Family::ExcBetaPrime;
  r.params_ = {std::move(beta_prime)};
  r.adjudicated_ = adjudicated;
  return r;
}

CoefficientRule CoefficientRule::table(std::map<std::pair<long, long>, Scalar> entries, long nmax, long kmax) {
  CoefficientRule r;
  r.family_ = Family::Table;
  r.table_ = std::move(entries);
  r.table_nmax_ = nmax;
  r.table_kmax_ = kmax;
  return r;
}

namespace {

std::map<std::string, std::string> parse_pairs(std::string_view body) {
  std::map<std::string, std::string> out;
  std::size_t pos = 0;
  while (pos <= body.size()) {
    const std::size_t comma = std::min(body.find(',', pos), body.size());
    const std::string_view item = body.substr(pos, comma - pos);
    const std::size_t eq = item.find('=');
    if (eq == std::string_view::npos) throw std::invalid_argument("expected key=value in '" + std::string(item) + "'");
    const std::string key(item.substr(0, eq));
    if (!out.emplace(key, std::string(item.substr(eq + 1))).second) {
      throw std::invalid_argument("duplicate key '" + key + "'");
    }
    pos = comma + 1;
  }
  return out;
}

std::string take(std::map<std::string, std::string>& kv, std::initializer_list<const char*> names) {
  for (const char* n : names) {
    auto it = kv.find(n);
    if (it != kv.end()) {
      std::string v = it->second;
      kv.erase(it);
      return v;
    }
  }
  throw std::invalid_argument(std::string("missing parameter '") + *names.begin() + "'");
}

}  // namespace

CoefficientRule CoefficientRule::parse(std::string_view spec) {
  const std::size_t colon = spec.find(':');
  if (colon == std::string_view::npos) throw std::invalid_argument("family spec needs 'name:params'");
  const std::string name(spec.substr(0, colon));
  auto kv = parse_pairs(spec.substr(colon + 1));
  auto scalar = [](const std::string& s) {
    try {
      return Scalar::parse(s);
    } catch (const std::invalid_argument&) {
      throw std::invalid_argument("bad scalar '" + s + "'");
    }
  };
  CoefficientRule rule;
  if (name == "mab") {
    Scalar a = scalar(take(kv, {"a"}));
    Scalar b = scalar(take(kv, {"b"}));
    rule = mab(a, b);
  } else if (name == "alpha") {
    rule = exc_alpha(scalar(take(kv, {"α", "alpha"})));
  } else if (name == "alphap") {
    rule = exc_alpha_prime(scalar(take(kv, {"α'", "alpha'", "alphap"})));
  } else if (name == "beta") {
    rule = exc_beta(scalar(take(kv, {"β", "beta"})));
  } else if (name == "betap") {
    Scalar bp = scalar(take(kv, {"β'", "beta'", "betap"}));
    bool adj = false;
    if (auto it = kv.find("reading"); it != kv.end()) {
      if (it->second == "adjudicated") {
        adj = true;
      } else if (it->second != "typeset") {
        throw std::invalid_argument("reading must be 'typeset' or 'adjudicated'");
      }
      kv.erase(it);
    }
    rule = exc_beta_prime(bp, adj);
  } else {
    throw std::invalid_argument("unknown family '" + name + "'");
  }
  if (!kv.empty()) throw std::invalid_argument("unknown parameter '" + kv.begin()->first + "' for " + name);
  return rule;
}

std::string CoefficientRule::spec_string() const {
  switch (family_) {
    case Family::Mab: return "mab:a=" + params_[0].to_string() + ",b=" + params_[1].to_string();
    case Family::ExcAlpha: return "alpha:α=" + params_[0].to_string();
    case Family::ExcAlphaPrime: return "alphap:α'=" + params_[0].to_string();
    case Family::ExcBeta: return "beta:β=" + params_[0].to_string();
    case Family::ExcBetaPrime:
      return "betap:β'=" + params_[0].to_string() + (adjudicated_ ? ",reading=adjudicated" : "");
    case Family::Table: return "table:entries=" + std::to_string(table_.size());
  }
  return "?";
}

Scalar CoefficientRule::coeff(const ScalarContext& ctx, long n, long k) const {
  switch (family_) {
    case Family::Mab: {
      const Scalar& a = params_[0];
      const Scalar& b = params_[1];
      return ctx.w(k) - a * ctx.ratio_pow(k) - b * ctx.p_pow(-k - n) * ctx.q_pow(k) * ctx.qint(n);
    }
    case Family::ExcAlpha:
      if (k != -1) return ctx.w(n + k + 1);
      return -ctx.q_pow(n) * ctx.qint(-n) + ctx.qint(-n) * ctx.qint(n + 1) * ctx.ratio_pow(n) * params_[0];
    case Family::ExcAlphaPrime:
      if (k != -n) return ctx.w(k);
      return ctx.p_pow(n) * ctx.qint(-n) + ctx.ratio_pow(-n) * ctx.qint(-n) * ctx.qint(n + 1) * params_[0];
    case Family::ExcBeta:
      if (k != 1) return -ctx.q_pow(n + k - 1) * ctx.qint(-n - k + 1);
      return -ctx.q_pow(n) * ctx.qint(-n) + ctx.ratio_pow(n) * ctx.qint(n) * ctx.qint(-n + 1) * params_[0];
    case Family::ExcBetaPrime: {
      if (k != -n) return ctx.w(k);
      const Scalar bracket = adjudicated_ ? ctx.qint(-n) : ctx.qint(n);
      return ctx.p_pow(n) * ctx.qint(-n) + ctx.ratio_pow(-n) * bracket * ctx.qint(n + 1) * params_[0];
    }
    case Family::Table: {
      if (std::abs(n) > table_nmax_ || std::abs(k) > table_kmax_) {
        throw DomainError("table coefficient (" + std::to_string(n) + "," + std::to_string(k) + ") outside window");
      }
      auto it = table_.find({n, k});
      return it == table_.end() ? Scalar() : it->second;
    }
  }
  return Scalar();
}

Scalar coeff(const ScalarContext& ctx, const CoefficientRule& rule, long n, long k) { return rule.coeff(ctx, n, k); }

WindowedVector WindowedVector::basis(long k, long window) {
  WindowedVector v(window);
  v.add(k, Scalar(1L));
  return v;
}

Scalar WindowedVector::at(long k) const {
  auto it = entries_.find(k);
  return it == entries_.end() ? Scalar() : it->second;
}

void WindowedVector::add(long k, const Scalar& x) {
  if (std::abs(k) > window_) throw DomainError("index " + std::to_string(k) + " outside window");
  if (x.is_zero()) return;
  auto it = entries_.find(k);
  if (it == entries_.end()) {
    entries_.emplace(k, x);
    return;
  }
  it->second += x;
  if (it->second.is_zero()) entries_.erase(it);
}

WindowedVector act(const ScalarContext& ctx, const CoefficientRule& rule, long n, const WindowedVector& v) {
  WindowedVector out(v.window());
  for (const auto& [k, x] : v.entries()) {
    const Scalar c = rule.coeff(ctx, n, k);
    if (c.is_zero()) continue;
    out.add(k + n, c * x);
  }
  return out;
}

Scalar relation_residual(const ScalarContext& ctx, const CoefficientRule& rule, long n, long m, long k) {
  auto c = [&](long i, long j) { return rule.coeff(ctx, i, j); };
  return ctx.ratio_pow(n) * c(m, k) * c(n, m + k) - ctx.ratio_pow(m) * c(n, k) * c(m, n + k) -
         (ctx.w(m) - ctx.w(n)) * c(n + m, k);
}

ResidualReport verify_module(const ScalarContext& ctx, const CoefficientRule& rule, long nmax, long kmax,
                             PairFilter filter) {
  if (nmax < 1 || kmax < nmax) throw DomainError("verify_module needs nmax >= 1 and kmax >= nmax");
  Json params{{"family", rule.spec_string()},
              {"nmax", nmax},
              {"kmax", kmax},
              {"filter", filter == PairFilter::All ? "all" : "generators"}};
  ResidualReport report("verify-module", std::move(params), ctx.to_json());
  for (long n = -nmax; n <= nmax; ++n) {
    for (long m = -nmax; m <= nmax; ++m) {
      if (filter == PairFilter::Generators && (std::abs(n) > 2 || std::abs(m) > 2 || std::abs(n + m) > 2)) continue;
      for (long k = -kmax; k <= kmax; ++k) {
        report.record("module-relation", {n, m, k}, relation_residual(ctx, rule, n, m, k));
      }
    }
  }
  return report;
}

Scalar weight(const ScalarContext& ctx, const CoefficientRule& rule, long k) { return rule.coeff(ctx, 0, k); }

bool weight_injective(const ScalarContext& ctx, const Scalar& a, long window) {
  std::vector<Scalar> weights;
  for (long k = -window; k <= window; ++k) weights.push_back(ctx.w(k) - a * ctx.ratio_pow(k));
  for (std::size_t i = 0; i < weights.size(); ++i) {
    for (std::size_t j = i + 1; j < weights.size(); ++j) {
      if (weights[i] == weights[j]) return false;
    }
  }
  return true;
}

bool weight_injective_closed_form(const ScalarContext& ctx, const Scalar& a) {
  return !(a + (ctx.p() - ctx.q()).inverse()).is_zero();
}

SubmoduleResult find_submodules(const ScalarContext& ctx, const CoefficientRule& rule, long window) {
  const long size = 2 * window + 1;
  auto idx = [&](long k) { return static_cast<std::size_t>(k + window); };
  std::vector<std::vector<std::size_t>> adj(static_cast<std::size_t>(size));
  for (long k = -window; k <= window; ++k) {
    for (long t = -window; t <= window; ++t) {
      const long n = t - k;
      if (n == 0) continue;
      if (!rule.coeff(ctx, n, k).is_zero()) adj[idx(k)].push_back(idx(t));
    }
  }

  // Tarjan's SCC; components come out in reverse topological order (sinks first).
  const std::size_t N = adj.size();
  std::vector<long> index(N, -1), low(N, 0);
  std::vector<bool> on_stack(N, false);
  std::vector<std::size_t> stack;
  std::vector<std::vector<std::size_t>> comps;
  std::vector<std::size_t> comp_of(N, 0);
  long counter = 0;
  std::function<void(std::size_t)> strong = [&](std::size_t v) {
    index[v] = low[v] = counter++;
    stack.push_back(v);
    on_stack[v] = true;
    for (std::size_t u : adj[v]) {
      if (index[u] < 0) {
        strong(u);
        low[v] = std::min(low[v], low[u]);
      } else if (on_stack[u]) {
        low[v] = std::min(low[v], index[u]);
      }
    }
    if (low[v] == index[v]) {
      std::vector<std::size_t> comp;
      std::size_t u;
      do {
        u = stack.back();
        stack.pop_back();
        on_stack[u] = false;
        comp_of[u] = comps.size();
        comp.push_back(u);
      } while (u != v);
      comps.push_back(std::move(comp));
    }
  };
  for (std::size_t v = 0; v < N; ++v) {
    if (index[v] < 0) strong(v);
  }

  const std::size_t C = comps.size();
  std::vector<std::set<std::size_t>> succ(C);
  for (std::size_t v = 0; v < N; ++v) {
    for (std::size_t u : adj[v]) {
      if (comp_of[u] != comp_of[v]) succ[comp_of[v]].insert(comp_of[u]);
    }
  }

  // Closed sets are the successor-closed unions of components. Components are
  // indexed sinks first, so every successor has a smaller index.
  SubmoduleResult result;
  std::vector<bool> chosen(C, false);
  std::vector<std::vector<long>> found;
  std::function<void(std::size_t)> enumerate = [&](std::size_t c) {
    if (result.truncated) return;
    if (c == C) {
      std::vector<long> subset;
      for (std::size_t i = 0; i < C; ++i) {
        if (!chosen[i]) continue;
        for (std::size_t v : comps[i]) subset.push_back(static_cast<long>(v) - window);
      }
      if (subset.empty() || subset.size() == N) return;
      if (found.size() >= kSubmoduleCap) {
        result.truncated = true;
        return;
      }
      std::sort(subset.begin(), subset.end());
      found.push_back(std::move(subset));
      return;
    }
    enumerate(c + 1);
    const bool closed = std::all_of(succ[c].begin(), succ[c].end(), [&](std::size_t s) { return chosen[s]; });
    if (closed) {
      chosen[c] = true;
      enumerate(c + 1);
      chosen[c] = false;
    }
  };
  enumerate(0);
  std::sort(found.begin(), found.end(), [](const auto& x, const auto& y) {
    return x.size() != y.size() ? x.size() < y.size() : x < y;
  });
  result.subsets = std::move(found);
  return result;
}

std::optional<long> is_reducible_closed_form(const ScalarContext& ctx, const Scalar& a, const Scalar& b, long mmax) {
  if (!weight_injective_closed_form(ctx, a)) throw DomainError("a = -1/(p-q) is excluded");
  for (long m = -mmax; m <= mmax; ++m) {
    if (!(a + ctx.w(m)).is_zero()) continue;
    if (b.is_zero() || (b + ctx.ratio_pow(m)).is_zero()) return m;
  }
  return std::nullopt;
}

std::pair<Scalar, Scalar> shift_params(const ScalarContext& ctx, const Scalar& a, const Scalar& b, long m) {
  const Scalar scale = ctx.ratio_pow(-m);
  return {(a + ctx.w(m)) * scale, b * scale};
}

std::optional<Intertwiner> find_intertwiner(const ScalarContext& ctx, const CoefficientRule& ruleA,
                                            const CoefficientRule& ruleB, long m, long window) {
  auto cA = [&](long n, long k) { return ruleA.coeff(ctx, n, k); };
  auto cB = [&](long n, long k) { return ruleB.coeff(ctx, n, k + m); };
  Intertwiner out;
  std::map<long, Scalar>& h = out.h;

  // h_{k+n} cA(n,k) = h_k cB(n,k): solve for one side from the other.
  auto propagate_from = [&](long start, const std::vector<long>& steps) {
    std::queue<long> todo;
    todo.push(start);
    while (!todo.empty()) {
      const long k = todo.front();
      todo.pop();
      for (long n : steps) {
        // forward: k -> k+n using the constraint at (n, k)
        const long t = k + n;
        if (std::abs(t) <= window && !h.count(t)) {
          const Scalar a = cA(n, k);
          if (!a.is_zero()) {
            h[t] = h[k] * cB(n, k) / a;
            todo.push(t);
          }
        }
        // backward: k -> k-n using the constraint at (n, k-n)
        const long s = k - n;
        if (std::abs(s) <= window && !h.count(s)) {
          const Scalar b = cB(n, s);
          if (!b.is_zero()) {
            h[s] = h[k] * cA(n, s) / b;
            todo.push(s);
          }
        }
      }
    }
  };

  h[0] = Scalar(1L);
  propagate_from(0, {1});
  propagate_from(0, {1, -1, 2, -2});
  for (long k = -window; k <= window; ++k) {
    if (h.count(k)) continue;
    out.notes.push_back("index " + std::to_string(k) + " unreached; set h=1");
    h[k] = Scalar(1L);
    propagate_from(k, {1, -1, 2, -2});
  }
  // Propagation from the seeds can leave h = 0 where a coefficient vanished;
  // every h must be nonzero and every constraint must hold.
  for (const auto& [k, x] : h) {
    if (x.is_zero()) return std::nullopt;
  }
  for (long n = -2; n <= 2; ++n) {
    for (long k = -window; k <= window; ++k) {
      if (std::abs(k + n) > window) continue;
      if (!(h[k + n] * cA(n, k) - h[k] * cB(n, k)).is_zero()) return std::nullopt;
    }
  }
  return out;
}

}  // namespace vpq
