#include "schur/symfunc.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>

#include "schur/parallel.hpp"

namespace schur {

namespace {

std::atomic<int> g_threads{0};

// partitions of every size up to rows*cols fitting a rows x cols rectangle
std::vector<Partition> all_partitions_in_rect(int rows, int cols) {
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int row, int maxpart) -> void {
        out.push_back(Partition(cur));
        if (row >= rows) return;
        for (int v = 1; v <= maxpart; ++v) {
            cur.push_back(v);
            self(self, row + 1, v);
            cur.pop_back();
        }
    };
    rec(rec, 0, cols);
    std::sort(out.begin(), out.end(), [](const Partition& x, const Partition& y) {
        if (x.size() != y.size()) return x.size() < y.size();
        return y < x;
    });
    return out;
}

// partitions of exactly n with at most maxlen parts, each part <= maxpart
std::vector<Partition> partitions_of(int n, int maxlen, int maxpart) {
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int left, int bound) -> void {
        if (left == 0) {
            out.push_back(Partition(cur));
            return;
        }
        if (static_cast<int>(cur.size()) >= maxlen) return;
        for (int v = std::min(bound, left); v >= 1; --v) {
            cur.push_back(v);
            self(self, left - v, v);
            cur.pop_back();
        }
    };
    rec(rec, n, maxpart);
    return out;
}

Int factorial(int n) {
    Int f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

Partition content_partition(int threes, int twos, int ones) {
    std::vector<int> parts;
    parts.insert(parts.end(), threes, 3);
    parts.insert(parts.end(), twos, 2);
    parts.insert(parts.end(), ones, 1);
    return Partition(std::move(parts));
}

}  // namespace

void set_threads(int n) { g_threads.store(n < 0 ? 0 : n); }

int effective_threads() {
    int n = g_threads.load();
    if (n == 0) {
        unsigned hc = std::thread::hardware_concurrency();
        n = hc ? static_cast<int>(hc) : 1;
    }
    return n;
}

void SymmetricFunction::add(const Partition& key, const Rat& c) {
    if (c == 0) return;
    auto [it, fresh] = coeffs.try_emplace(key, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) coeffs.erase(it);
    }
}

// ---------------------------------------------------------------------------
// Generic per-pair Kostka DP: walk the content parts largest first, keeping a
// frontier of intermediate shapes inside la; each step adds a horizontal
// strip (at most one box per column).

Int kostka(const Partition& la, const Partition& mu) {
    if (la.size() != mu.size()) return 0;
    if (la.size() == 0) return 1;
    std::map<std::vector<int>, Int> frontier;
    frontier[{}] = 1;
    const auto& bound = la.parts();
    const int rows = la.length();
    for (int s : mu.parts()) {
        std::map<std::vector<int>, Int> next;
        for (const auto& [shape, ways] : frontier) {
            std::vector<int> grown(shape);
            grown.resize(rows, 0);
            // pick the new length of each row; a row may not grow past the
            // previous row's old length, which is the horizontal-strip rule
            auto rec = [&](auto&& self, int row, int remaining) -> void {
                if (remaining == 0) {
                    std::vector<int> key(grown);
                    while (!key.empty() && key.back() == 0) key.pop_back();
                    next[key] += ways;
                    return;
                }
                if (row >= rows) return;
                const int old = row < static_cast<int>(shape.size()) ? shape[row] : 0;
                const int cap = std::min(bound[row], row == 0 ? old + remaining
                                                             : (row - 1 < static_cast<int>(shape.size()) ? shape[row - 1] : 0));
                for (int len = old; len <= cap && len - old <= remaining; ++len) {
                    grown[row] = len;
                    self(self, row + 1, remaining - (len - old));
                    grown[row] = old;
                }
            };
            rec(rec, 0, s);
        }
        frontier.swap(next);
    }
    auto it = frontier.find(la.parts());
    return it == frontier.end() ? Int(0) : it->second;
}

// ---------------------------------------------------------------------------
// Box engine

StripSweep::StripSweep(int m) : m_(m) {
    if (m < 1) throw std::invalid_argument("need at least one variable");
    index_.assign(static_cast<size_t>(m + 1) * (m + 1) * (m + 1), -1);
    for (int c1 = 0; c1 <= m; ++c1)
        for (int c2 = 0; c2 <= c1; ++c2)
            for (int c3 = 0; c3 <= c2; ++c3) {
                index_[(static_cast<size_t>(c1) * (m_ + 1) + c2) * (m_ + 1) + c3] =
                    static_cast<int>(states_.size());
                states_.push_back({c1, c2, c3});
            }
}

int StripSweep::state_index(int c1, int c2, int c3) const {
    if (c1 < 0 || c1 > m_ || c2 < 0 || c2 > c1 || c3 < 0 || c3 > c2)
        throw std::out_of_range("not a state triple");
    return index_[(static_cast<size_t>(c1) * (m_ + 1) + c2) * (m_ + 1) + c3];
}

int StripSweep::state_index(const Partition& lambda_prime) const {
    if (lambda_prime.length() > 3 || lambda_prime.part(0) > m_)
        throw std::invalid_argument("transpose does not fit the state grid");
    return state_index(lambda_prime.part(0), lambda_prime.part(1), lambda_prime.part(2));
}

void StripSweep::apply_strip(int strip_size, const std::vector<Int>& src,
                             std::vector<Int>& dst, bool parallel) const {
    static constexpr int kDeltas[3][3][3] = {
        {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}},
        {{1, 1, 0}, {1, 0, 1}, {0, 1, 1}},
        {{1, 1, 1}, {0, 0, 0}, {0, 0, 0}},
    };
    const int options = strip_size == 3 ? 1 : 3;
    const auto* deltas = kDeltas[strip_size - 1];
    const int n = state_count();
    dst.assign(n, Int(0));
#pragma omp parallel for schedule(static) if (parallel)
    for (int t = 0; t < n; ++t) {
        const auto& s = states_[t];
        Int acc = 0;
        for (int o = 0; o < options; ++o) {
            const int c1 = s[0] - deltas[o][0];
            const int c2 = s[1] - deltas[o][1];
            const int c3 = s[2] - deltas[o][2];
            if (c1 < 0 || c2 < 0 || c3 < 0 || c1 < c2 || c2 < c3) continue;
            const Int& v = src[index_[(static_cast<size_t>(c1) * (m_ + 1) + c2) * (m_ + 1) + c3]];
            if (v != 0) acc += v;
        }
        if (acc != 0) dst[t] = std::move(acc);
    }
}

void StripSweep::run(
    const std::function<void(int, int, int, const std::vector<Int>&)>& visit) const {
    const bool parallel = effective_threads() > 1;
    const int n = state_count();
    std::vector<Int> f3(n, Int(0)), f2, f1, tmp;
    f3[state_index(0, 0, 0)] = 1;
    for (int j = 0; j <= m_; ++j) {
        if (j > 0) {
            apply_strip(3, f3, tmp, parallel);
            f3.swap(tmp);
        }
        f2 = f3;
        for (int k = 0; j + k <= m_; ++k) {
            if (k > 0) {
                apply_strip(2, f2, tmp, parallel);
                f2.swap(tmp);
            }
            f1 = f2;
            for (int l = 0; j + k + l <= m_; ++l) {
                if (l > 0) {
                    apply_strip(1, f1, tmp, parallel);
                    f1.swap(tmp);
                }
                visit(j, k, l, f1);
            }
        }
    }
}

// ---------------------------------------------------------------------------

SymmetricFunction schur_to_monomial(const Partition& la, int m) {
    if (la.part(0) > 3)
        throw std::invalid_argument("shape wider than 3 columns");
    if (la.length() > m)
        throw std::invalid_argument("shape has more rows than variables");
    SymmetricFunction out;
    out.basis = Basis::Monomial;
    out.num_vars = m;
    const int n = la.size();
    StripSweep sweep(m);
    const int target = sweep.state_index(transpose(la));
    sweep.run([&](int j, int k, int l, const std::vector<Int>& K) {
        if (3 * j + 2 * k + l != n) return;
        const Int& v = K[target];
        if (v != 0) out.coeffs.emplace(content_partition(j, k, l), Rat(v));
    });
    return out;
}

Int permutation_count(const Partition& mu, int m) {
    if (mu.length() > m) return 0;
    Int count = factorial(m);
    count /= factorial(m - mu.length());
    int run = 1;
    for (int i = 1; i <= mu.length(); ++i) {
        if (i < mu.length() && mu.parts()[i] == mu.parts()[i - 1]) {
            ++run;
        } else {
            count /= factorial(run);
            run = 1;
        }
    }
    return count;
}

Int monomial_count(const SymmetricFunction& f) {
    if (f.basis != Basis::Monomial)
        throw std::invalid_argument("monomial_count needs the monomial basis");
    Int total = 0;
    for (const auto& [mu, c] : f.coeffs)
        if (c != 0) total += permutation_count(mu, f.num_vars);
    return total;
}

namespace {

// value of one Schur term at (1, ..., 1), through the Kostka expansion
Rat schur_ones(const Partition& la, int m) {
    if (la.length() > m) return 0;
    Rat total = 0;
    for (const auto& mu : partitions_of(la.size(), m, la.part(0))) {
        Int k = kostka(la, mu);
        if (k != 0) total += Rat(k * permutation_count(mu, m));
    }
    return total;
}

}  // namespace

Rat specialize_ones(const SymmetricFunction& f) {
    Rat total = 0;
    for (const auto& [p, c] : f.coeffs) {
        if (f.basis == Basis::Monomial)
            total += c * Rat(permutation_count(p, f.num_vars));
        else
            total += c * schur_ones(p, f.num_vars);
    }
    return total;
}

namespace {

template <typename Num>
Num eval_monomial_sum(const Partition& mu, const std::vector<Num>& x) {
    const int m = static_cast<int>(x.size());
    if (mu.length() > m) return Num(0);
    std::vector<int> exps(m - mu.length(), 0);
    for (int i = mu.length() - 1; i >= 0; --i) exps.push_back(mu.parts()[i]);
    // exps is sorted ascending, so next_permutation walks each distinct
    // rearrangement exactly once
    Num total(0);
    do {
        Num term(1);
        for (int i = 0; i < m; ++i)
            for (int e = 0; e < exps[i]; ++e) term *= x[i];
        total += term;
    } while (std::next_permutation(exps.begin(), exps.end()));
    return total;
}

template <typename Num>
Num evaluate_impl(const SymmetricFunction& f, const std::vector<Num>& x) {
    if (static_cast<int>(x.size()) != f.num_vars)
        throw std::invalid_argument("evaluation point has the wrong arity");
    Num total(0);
    if (f.basis == Basis::Monomial) {
        for (const auto& [mu, c] : f.coeffs) total += Num(c) * eval_monomial_sum(mu, x);
    } else {
        for (const auto& [la, c] : f.coeffs) {
            SymmetricFunction mono = schur_to_monomial(la, f.num_vars);
            for (const auto& [mu, k] : mono.coeffs) total += Num(c) * Num(k) * eval_monomial_sum(mu, x);
        }
    }
    return total;
}

}  // namespace

Rat evaluate(const SymmetricFunction& f, const std::vector<Rat>& x) {
    return evaluate_impl(f, x);
}

std::complex<double> evaluate(const SymmetricFunction& f,
                              const std::vector<std::complex<double>>& x) {
    if (static_cast<int>(x.size()) != f.num_vars)
        throw std::invalid_argument("evaluation point has the wrong arity");
    auto as_double = [](const Rat& r) { return r.convert_to<double>(); };
    std::complex<double> total = 0;
    if (f.basis == Basis::Monomial) {
        for (const auto& [mu, c] : f.coeffs) total += as_double(c) * eval_monomial_sum(mu, x);
    } else {
        for (const auto& [la, c] : f.coeffs) {
            SymmetricFunction mono = schur_to_monomial(la, f.num_vars);
            for (const auto& [mu, k] : mono.coeffs)
                total += as_double(c) * as_double(k) * eval_monomial_sum(mu, x);
        }
    }
    return total;
}

SymmetricFunction product_lhs(const std::vector<FactorProfile>& profile, int m) {
    for (const auto& p : profile)
        if (p.per_degree[0] != 1)
            throw std::invalid_argument("factor polynomial must have constant term 1");
    SymmetricFunction out;
    out.basis = Basis::Monomial;
    out.num_vars = m;
    for (const auto& mu : enumerate_box(BoxShape(m, 3))) {
        Rat coeff = 0;
        for (const auto& p : profile) {
            Rat term = p.weight;
            for (int part : mu.parts()) term *= p.per_degree[part];
            coeff += term;
        }
        if (coeff != 0) out.coeffs.emplace(mu, coeff);
    }
    return out;
}

SymmetricFunction pieri_multiply(const SymmetricFunction& f, bool clip_to_box) {
    if (f.basis != Basis::Schur)
        throw std::invalid_argument("Pieri multiplication needs the Schur basis");
    const int m = f.num_vars;
    SymmetricFunction out;
    out.basis = Basis::Schur;
    out.num_vars = m;
    for (const auto& [la, c] : f.coeffs) {
        std::vector<int> mu(m, 0);
        // grow each row by 0 or 1 keeping the rows weakly decreasing
        auto rec = [&](auto&& self, int row) -> void {
            if (row == m) {
                Partition grown{std::vector<int>(mu)};
                if (!clip_to_box || grown.part(0) <= 3) out.add(grown, c);
                return;
            }
            const int base = la.part(row);
            const int cap = row == 0 ? base + 1 : mu[row - 1];
            for (int v = base; v <= std::min(base + 1, cap); ++v) {
                mu[row] = v;
                self(self, row + 1);
            }
            mu[row] = 0;
        };
        if (la.length() > m) continue;
        rec(rec, 0);
    }
    return out;
}

Int hook_content_dim(const Partition& la, int m) {
    if (la.length() > m) return 0;
    const Partition tr = transpose(la);
    Int num = 1, den = 1;
    for (int i = 0; i < la.length(); ++i)
        for (int j = 0; j < la.parts()[i]; ++j) {
            num *= m + j - i;
            den *= (la.parts()[i] - j) + (tr.parts()[j] - i) - 1;
        }
    return num / den;
}

// ---------------------------------------------------------------------------
// Paired-expansion comparison over (x-partition, t-partition) coordinates

namespace {

using PairKey = std::pair<Partition, Partition>;

// exact expansion of prod_j e_{nu_j}(x_1..x_m) over a dense exponent table
void elementary_product(const Partition& nu, int m, int g,
                        std::map<Partition, Int>& out) {
    std::vector<int> radix(m, 0);
    size_t table = 1;
    for (int i = 0; i < m; ++i) table *= g + 1;
    std::vector<long long> poly(table, 0), next(table, 0);
    poly[0] = 1;
    std::vector<size_t> stride(m, 1);
    for (int i = 1; i < m; ++i) stride[i] = stride[i - 1] * (g + 1);
    for (int part : nu.parts()) {
        std::fill(next.begin(), next.end(), 0);
        for (unsigned mask = 0; mask < (1u << m); ++mask) {
            if (__builtin_popcount(mask) != part) continue;
            size_t shift = 0;
            for (int i = 0; i < m; ++i)
                if (mask & (1u << i)) shift += stride[i];
            for (size_t idx = 0; idx < table; ++idx) {
                if (poly[idx] == 0) continue;
                bool ok = true;
                for (int i = 0; i < m && ok; ++i)
                    if ((mask & (1u << i)) && (idx / stride[i]) % (g + 1) == static_cast<size_t>(g))
                        ok = false;
                if (ok) next[idx + shift] += poly[idx];
            }
        }
        poly.swap(next);
    }
    for (size_t idx = 0; idx < table; ++idx) {
        if (poly[idx] == 0) continue;
        std::vector<int> exps(m);
        for (int i = 0; i < m; ++i) exps[i] = static_cast<int>((idx / stride[i]) % (g + 1));
        // the monomial coefficient is read off the sorted representative of
        // each symmetry class
        bool sorted = true;
        for (int i = 1; i < m && sorted; ++i) sorted = exps[i - 1] >= exps[i];
        if (!sorted) continue;
        out[Partition(std::move(exps))] += poly[idx];
    }
}

}  // namespace

bool dual_cauchy_check(int m, int g) {
    if (m < 1 || g < 1 || m > 5 || g > 5)
        throw std::invalid_argument("paired expansion limited to 5 variables per side");
    for (int sign = 0; sign < 2; ++sign) {
        std::map<PairKey, Int> lhs, rhs;
        for (const auto& nu : all_partitions_in_rect(g, m)) {
            std::map<Partition, Int> xpoly;
            elementary_product(nu, m, g, xpoly);
            const Int flip = (sign && nu.size() % 2) ? -1 : 1;
            for (auto& [mu, c] : xpoly)
                if (c != 0) lhs[{mu, nu}] += flip * c;
        }
        for (const auto& la : all_partitions_in_rect(m, g)) {
            const Partition tr = transpose(la);
            const Int flip = (sign && la.size() % 2) ? -1 : 1;
            std::vector<std::pair<Partition, Int>> left, right;
            for (const auto& mu : partitions_of(la.size(), m, la.part(0))) {
                Int k = kostka(la, mu);
                if (k != 0) left.emplace_back(mu, k);
            }
            for (const auto& nu : partitions_of(tr.size(), g, tr.part(0))) {
                Int k = kostka(tr, nu);
                if (k != 0) right.emplace_back(nu, k);
            }
            for (const auto& [mu, k1] : left)
                for (const auto& [nu, k2] : right) rhs[{mu, nu}] += flip * k1 * k2;
        }
        std::erase_if(lhs, [](const auto& kv) { return kv.second == 0; });
        std::erase_if(rhs, [](const auto& kv) { return kv.second == 0; });
        if (lhs != rhs) return false;
    }
    return true;
}

}  // namespace schur
