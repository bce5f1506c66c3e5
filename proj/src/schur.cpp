#include "skewkit/schur.hpp"

#include <algorithm>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <unordered_map>

namespace skewkit {

Coeff checked_add(Coeff a, Coeff b) {
    Coeff r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("coefficient overflow");
    return r;
}

Coeff checked_mul(Coeff a, Coeff b) {
    Coeff r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("coefficient overflow");
    return r;
}

SchurPoly SchurPoly::term(const Partition& p, Coeff c) {
    SchurPoly f;
    f.add(p, c);
    return f;
}

Coeff SchurPoly::coeff(const Partition& p) const {
    auto it = terms_.find(p);
    return it == terms_.end() ? 0 : it->second;
}

void SchurPoly::add(const Partition& p, Coeff c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(p, c);
    if (!inserted) {
        it->second = checked_add(it->second, c);
        if (it->second == 0) terms_.erase(it);
    }
}

int SchurPoly::degree() const {
    int d = -2;
    for (auto& [p, c] : terms_) {
        int s = partition_size(p);
        if (d == -2) d = s;
        else if (d != s) return -1;
    }
    return d == -2 ? 0 : d;
}

SchurPoly& SchurPoly::operator+=(const SchurPoly& o) {
    for (auto& [p, c] : o.terms_) add(p, c);
    return *this;
}

SchurPoly& SchurPoly::operator-=(const SchurPoly& o) {
    for (auto& [p, c] : o.terms_) add(p, -c);
    return *this;
}

SchurPoly SchurPoly::operator+(const SchurPoly& o) const {
    SchurPoly r = *this;
    r += o;
    return r;
}

SchurPoly SchurPoly::operator-(const SchurPoly& o) const {
    SchurPoly r = *this;
    r -= o;
    return r;
}

SchurPoly SchurPoly::operator-() const { return scaled(-1); }

SchurPoly SchurPoly::scaled(Coeff k) const {
    SchurPoly r;
    if (k == 0) return r;
    for (auto& [p, c] : terms_) r.terms_.emplace(p, checked_mul(c, k));
    return r;
}

SchurPoly SchurPoly::operator*(const SchurPoly& o) const { return multiply(*this, o); }

std::string SchurPoly::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (auto& [p, c] : terms_) {
        Coeff a = c;
        if (!first) {
            s += a < 0 ? " - " : " + ";
            if (a < 0) a = -a;
        } else if (a < 0) {
            s += "-";
            a = -a;
        }
        if (a != 1) s += std::to_string(a) + " ";
        s += "s" + partition_str(p);
        first = false;
    }
    return s;
}

namespace {

// Backtracking over fillings of λ/μ in reverse reading order (rows top to
// bottom, each row right to left). Entries weakly increase along rows,
// strictly down columns, and the reading word stays a lattice word.
class LRFiller {
public:
    LRFiller(const Partition& lambda, const Partition& mu, const Partition* target)
        : lam_(lambda), target_(target) {
        rows_ = static_cast<int>(lambda.size());
        mu_.assign(rows_, 0);
        for (std::size_t i = 0; i < mu.size() && static_cast<int>(i) < rows_; ++i) mu_[i] = mu[i];
        width_ = rows_ ? lambda[0] : 0;
        grid_.assign(static_cast<std::size_t>(rows_) * (width_ + 1), 0);
        for (int i = 0; i < rows_; ++i)
            for (int j = lam_[i] - 1; j >= mu_[i]; --j) order_.push_back({i, j});
        cnt_.assign(order_.size() + 2, 0);
    }

    void run(std::map<Partition, Coeff>& out) {
        out_ = &out;
        rec(0, 0);
    }

private:
    int& at(int i, int j) { return grid_[static_cast<std::size_t>(i) * (width_ + 1) + j]; }

    void rec(std::size_t k, int maxv) {
        if (k == order_.size()) {
            Partition content;
            for (int v = 1; v <= maxv; ++v) content.push_back(cnt_[v]);
            auto& slot = (*out_)[content];
            slot = checked_add(slot, 1);
            return;
        }
        auto [i, j] = order_[k];
        int lo = 1;
        if (i > 0 && j >= mu_[i - 1] && j < lam_[i - 1]) lo = at(i - 1, j) + 1;
        int hi = maxv + 1;
        if (j + 1 < lam_[i]) hi = std::min(hi, at(i, j + 1));
        if (target_) hi = std::min(hi, static_cast<int>(target_->size()));
        for (int v = lo; v <= hi; ++v) {
            if (v > 1 && cnt_[v] >= cnt_[v - 1]) continue;
            if (target_ && cnt_[v] >= (*target_)[v - 1]) continue;
            at(i, j) = v;
            ++cnt_[v];
            rec(k + 1, std::max(maxv, v));
            --cnt_[v];
        }
    }

    Partition lam_;
    Partition mu_;
    const Partition* target_;
    int rows_ = 0, width_ = 0;
    std::vector<int> grid_;
    std::vector<std::pair<int, int>> order_;
    std::vector<int> cnt_;
    std::map<Partition, Coeff>* out_ = nullptr;
};

struct PartitionPairHash {
    std::size_t operator()(const std::pair<Partition, Partition>& k) const {
        std::size_t h = 1469598103934665603ull;
        for (int x : k.first) h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ull;
        h = (h ^ 0xffu) * 1099511628211ull;
        for (int x : k.second) h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ull;
        return h;
    }
};

std::shared_mutex g_lr_mutex;
std::unordered_map<std::pair<Partition, Partition>, SchurPoly, PartitionPairHash> g_lr_cache;

}  // namespace

std::map<Partition, Coeff> lr_fillings(const Partition& lambda, const Partition& mu) {
    std::map<Partition, Coeff> out;
    if (!contains(lambda, mu)) return out;
    // Row by row from the top. A state is the content so far plus the
    // entries of the previous row; distinct tableaux sharing a state merge.
    // Key layout: content..., -1, previous row entries...
    using Key = std::vector<int>;
    struct KeyHash {
        std::size_t operator()(const Key& k) const {
            std::size_t h = 1469598103934665603ull;
            for (int x : k) h = (h ^ static_cast<std::size_t>(x + 1)) * 1099511628211ull;
            return h;
        }
    };
    const int rows = static_cast<int>(lambda.size());
    Partition m(rows, 0);
    for (std::size_t i = 0; i < mu.size() && static_cast<int>(i) < rows; ++i) m[i] = mu[i];

    std::unordered_map<Key, Coeff, KeyHash> cur{{Key{-1}, 1}}, next;
    std::vector<int> content, prev, row, r;
    for (int i = 0; i < rows; ++i) {
        const int lo = m[i], len = lambda[i] - m[i];
        const int prev_lo = i > 0 ? m[i - 1] : 0;
        next.clear();
        for (auto& [key, mult] : cur) {
            auto sep = std::find(key.begin(), key.end(), -1);
            content.assign(key.begin(), sep);
            prev.assign(sep + 1, key.end());
            row.assign(len, 0);
            r.assign(content.size() + 2, 0);
            auto emit = [&] {
                Key k;
                std::size_t n = std::max(content.size(), r.size());
                for (std::size_t v = 0; v < n; ++v) {
                    int c = (v < content.size() ? content[v] : 0) + (v < r.size() ? r[v] : 0);
                    k.push_back(c);
                }
                while (!k.empty() && k.back() == 0) k.pop_back();
                k.push_back(-1);
                k.insert(k.end(), row.begin(), row.end());
                auto& slot = next[k];
                slot = checked_add(slot, mult);
            };
            auto fill = [&](auto&& self, int pos) -> void {
                if (pos == len) return emit();
                const int col = lo + pos;
                int vmin = pos > 0 ? row[pos - 1] : 1;
                const int above = col - prev_lo;
                if (above >= 0 && above < static_cast<int>(prev.size()))
                    vmin = std::max(vmin, prev[above] + 1);
                const int vmax = static_cast<int>(content.size()) + 1;
                for (int v = vmin; v <= vmax; ++v) {
                    // reading this row right to left: c_v + r_v <= c_{v-1}
                    if (v > 1) {
                        int cv = v - 1 < static_cast<int>(content.size()) ? content[v - 1] : 0;
                        if (cv + r[v - 1] + 1 > content[v - 2]) continue;
                    }
                    row[pos] = v;
                    ++r[v - 1];
                    self(self, pos + 1);
                    --r[v - 1];
                }
            };
            fill(fill, 0);
        }
        std::swap(cur, next);
    }
    for (auto& [key, mult] : cur) {
        Partition nu(key.begin(), std::find(key.begin(), key.end(), -1));
        auto& slot = out[nu];
        slot = checked_add(slot, mult);
    }
    return out;
}

std::map<Partition, Coeff> lr_fillings_backtrack(const Partition& lambda, const Partition& mu) {
    std::map<Partition, Coeff> out;
    if (!contains(lambda, mu)) return out;
    LRFiller f(lambda, mu, nullptr);
    f.run(out);
    return out;
}

Coeff lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu) {
    if (!contains(lambda, mu)) return 0;
    if (partition_size(lambda) != partition_size(mu) + partition_size(nu)) return 0;
    std::map<Partition, Coeff> out;
    LRFiller f(lambda, mu, &nu);
    f.run(out);
    auto it = out.find(nu);
    return it == out.end() ? 0 : it->second;
}

const SchurPoly& lr_product(const Partition& a, const Partition& b) {
    // symmetric in its arguments; key on the sorted pair
    std::pair<Partition, Partition> key = a < b ? std::make_pair(a, b) : std::make_pair(b, a);
    {
        std::shared_lock lock(g_lr_mutex);
        auto it = g_lr_cache.find(key);
        if (it != g_lr_cache.end()) return it->second;
    }
    // The larger factor sits northeast, where the lattice rule forces its filling.
    const Partition& big = partition_size(a) >= partition_size(b) ? a : b;
    const Partition& small = &big == &a ? b : a;
    SkewDiagram shape =
        disjoint_sum({make_skew(small, {}), make_skew(big, {})});
    SchurPoly result;
    for (auto& [nu, c] : lr_fillings(shape.lambda(), shape.mu())) result.add(nu, c);
    std::unique_lock lock(g_lr_mutex);
    auto [it, inserted] = g_lr_cache.emplace(std::move(key), std::move(result));
    return it->second;
}

SchurPoly multiply(const SchurPoly& f, const SchurPoly& g) {
    SchurPoly r;
    if (f.is_zero() || g.is_zero()) return r;
    for (auto& [p, a] : f.terms()) {
        for (auto& [q, b] : g.terms()) {
            Coeff ab = checked_mul(a, b);
            if (p.empty()) {
                r.add(q, ab);
            } else if (q.empty()) {
                r.add(p, ab);
            } else {
                for (auto& [lam, c] : lr_product(p, q).terms()) r.add(lam, checked_mul(ab, c));
            }
        }
    }
    return r;
}

SchurPoly power(const SchurPoly& f, int k) {
    SchurPoly r = SchurPoly::one();
    for (int i = 0; i < k; ++i) r = multiply(r, f);
    return r;
}

SchurPoly skew_schur(const SkewDiagram& d) {
    if (d.empty()) return SchurPoly::one();
    SchurPoly r;
    for (auto& [nu, c] : lr_fillings(d.lambda(), d.mu())) r.add(nu, c);
    return r;
}

SchurPoly omega(const SchurPoly& f) {
    SchurPoly r;
    for (auto& [p, c] : f.terms()) r.add(conjugate(p), c);
    return r;
}

namespace {

void ssyt_rec(const CellList& cells, std::size_t k, int nvars, std::vector<int>& value,
              std::vector<int>& expo, MonomialPoly& out) {
    if (k == cells.size()) {
        auto& slot = out[expo];
        slot = checked_add(slot, 1);
        return;
    }
    Cell x = cells[k];
    int lo = 1;
    // cells are sorted row-major, so west and north neighbours are already set
    auto west = std::lower_bound(cells.begin(), cells.begin() + k, Cell{x.r, x.c - 1});
    if (west != cells.begin() + k && *west == Cell{x.r, x.c - 1})
        lo = std::max(lo, value[west - cells.begin()]);
    auto north = std::lower_bound(cells.begin(), cells.begin() + k, Cell{x.r - 1, x.c});
    if (north != cells.begin() + k && *north == Cell{x.r - 1, x.c})
        lo = std::max(lo, value[north - cells.begin()] + 1);
    for (int v = lo; v <= nvars; ++v) {
        value[k] = v;
        ++expo[v - 1];
        ssyt_rec(cells, k + 1, nvars, value, expo, out);
        --expo[v - 1];
    }
}

}  // namespace

MonomialPoly monomial_oracle(const SkewDiagram& d, int nvars) {
    if (nvars < 1) throw InvalidInput("nvars must be positive");
    MonomialPoly out;
    std::vector<int> value(d.size(), 0), expo(nvars, 0);
    ssyt_rec(d.cells(), 0, nvars, value, expo, out);
    return out;
}

MonomialPoly schur_to_monomials(const SchurPoly& f, int nvars) {
    MonomialPoly out;
    for (auto& [p, c] : f.terms()) {
        if (static_cast<int>(p.size()) > nvars) continue;
        for (auto& [e, k] : monomial_oracle(make_skew(p, {}), nvars)) {
            auto& slot = out[e];
            slot = checked_add(slot, checked_mul(c, k));
        }
    }
    for (auto it = out.begin(); it != out.end();)
        it = it->second == 0 ? out.erase(it) : std::next(it);
    return out;
}

SchurPoly det_schur(const std::vector<std::vector<SchurPoly>>& m) {
    return determinant<SchurPoly>(m, SchurPoly::zero(), SchurPoly::one(),
                                  [](const SchurPoly& f) { return f.is_zero(); });
}

long long det_int(const std::vector<std::vector<long long>>& m) {
    return determinant<long long>(m, 0, 1, [](const long long& x) { return x == 0; });
}

}  // namespace skewkit
