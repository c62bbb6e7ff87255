#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <map>
#include <ostream>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "integer.hpp"

namespace hororigid {

enum class ComponentKind { Simple, Torus, Trivial };

struct ComponentSpec {
    ComponentKind kind = ComponentKind::Simple;
    char letter = 'A';
    int rank = 1;

    static ComponentSpec simple(char letter, int rank) { return {ComponentKind::Simple, letter, rank}; }
    static ComponentSpec torus() { return {ComponentKind::Torus, 'T', 0}; }
    static ComponentSpec trivial() { return {ComponentKind::Trivial, '1', 0}; }

    bool is_simple() const { return kind == ComponentKind::Simple; }
    int simple_rank() const { return is_simple() ? rank : 0; }

    /// "A3", "C*" for the torus, "-" for the trivial group.
    std::string name() const {
        switch (kind) {
        case ComponentKind::Torus: return "C*";
        case ComponentKind::Trivial: return "-";
        default: return std::string(1, letter) + std::to_string(rank);
        }
    }

    friend bool operator==(const ComponentSpec& a, const ComponentSpec& b) {
        if (a.kind != b.kind) return false;
        return !a.is_simple() || (a.letter == b.letter && a.rank == b.rank);
    }
};

class RootSystemError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct BuildOptions {
    /// D3 is rejected unless asked for; when allowed it uses the D-series formula (node 1 is the centre).
    bool allow_d3 = false;
};

using Matrix = std::vector<std::vector<int>>;

/// Cartan block in Bourbaki numbering, entry [i][j] = <alpha_i, alpha_j^vee> (0-based).
inline Matrix cartan_block(char letter, int n, BuildOptions opts = {}) {
    auto bad = [&](const std::string& why) {
        return RootSystemError(std::string("invalid simple type ") + letter + std::to_string(n) + ": " + why);
    };
    switch (letter) {
    case 'A': if (n < 1) throw bad("rank must be >= 1"); break;
    case 'B': if (n < 2) throw bad("rank must be >= 2"); break;
    case 'C': if (n < 2) throw bad("rank must be >= 2"); break;
    case 'D':
        if (n < 3 || (n == 3 && !opts.allow_d3)) throw bad("rank must be >= 4");
        break;
    case 'E': if (n < 6 || n > 8) throw bad("rank must be 6, 7 or 8"); break;
    case 'F': if (n != 4) throw bad("rank must be 4"); break;
    case 'G': if (n != 2) throw bad("rank must be 2"); break;
    default: throw bad("unknown letter");
    }
    Matrix m(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i) m[i][i] = 2;
    auto link = [&](int i, int j, int ij = -1, int ji = -1) {
        // 1-based Bourbaki labels; ij = <alpha_i, alpha_j^vee>
        m[i - 1][j - 1] = ij;
        m[j - 1][i - 1] = ji;
    };
    switch (letter) {
    case 'A':
        for (int i = 1; i < n; ++i) link(i, i + 1);
        break;
    case 'B':
        for (int i = 1; i < n - 1; ++i) link(i, i + 1);
        link(n - 1, n, -2, -1); // alpha_n short
        break;
    case 'C':
        for (int i = 1; i < n - 1; ++i) link(i, i + 1);
        link(n - 1, n, -1, -2); // alpha_n long
        break;
    case 'D':
        for (int i = 1; i < n - 1; ++i) link(i, i + 1);
        link(n - 2, n);
        break;
    case 'E':
        link(1, 3);
        link(2, 4);
        for (int i = 3; i < n; ++i) link(i, i + 1);
        break;
    case 'F':
        link(1, 2);
        link(2, 3, -2, -1); // alpha_1, alpha_2 long
        link(3, 4);
        break;
    case 'G':
        link(1, 2, -1, -3); // alpha_1 short
        break;
    }
    return m;
}

/// Permutations of 1-based labels preserving the Cartan block, identity first.
inline std::vector<std::vector<int>> diagram_automorphisms(char letter, int n) {
    std::vector<int> id(n + 1);
    for (int i = 0; i <= n; ++i) id[i] = i;
    std::vector<std::vector<int>> out{id};
    auto with = [&](std::initializer_list<std::pair<int, int>> swaps) {
        auto p = id;
        for (auto [a, b] : swaps) std::swap(p[a], p[b]);
        out.push_back(p);
    };
    if (letter == 'A' && n >= 2) {
        auto p = id;
        for (int i = 1; i <= n; ++i) p[i] = n + 1 - i;
        out.push_back(p);
    } else if (letter == 'D' && n == 4) {
        with({{1, 3}});
        with({{1, 4}});
        with({{3, 4}});
        auto p = id;
        p[1] = 3, p[3] = 4, p[4] = 1;
        out.push_back(p);
        p = id;
        p[1] = 4, p[4] = 3, p[3] = 1;
        out.push_back(p);
    } else if (letter == 'D' && n >= 3) {
        with({{n - 1, n}});
    } else if (letter == 'E' && n == 6) {
        with({{1, 6}, {3, 5}});
    }
    return out;
}

/// Integer vector tagged by what its coordinates mean.
template <ExactInteger T, class Tag>
struct Coords {
    std::vector<T> v;

    Coords() = default;
    explicit Coords(std::size_t n) : v(n, T(0)) {}
    explicit Coords(std::vector<T> x) : v(std::move(x)) {}
    Coords(std::initializer_list<T> x) : v(x) {}

    std::size_t size() const { return v.size(); }
    T& operator[](std::size_t i) { return v.at(i); }
    const T& operator[](std::size_t i) const { return v.at(i); }

    friend bool operator==(const Coords&, const Coords&) = default;
    friend auto operator<=>(const Coords& a, const Coords& b) { return a.v <=> b.v; }

    Coords& operator+=(const Coords& o) {
        check(o);
        for (std::size_t i = 0; i < v.size(); ++i) v[i] += o.v[i];
        return *this;
    }
    Coords& operator-=(const Coords& o) {
        check(o);
        for (std::size_t i = 0; i < v.size(); ++i) v[i] -= o.v[i];
        return *this;
    }
    Coords& operator*=(const T& s) {
        for (auto& x : v) x *= s;
        return *this;
    }
    friend Coords operator+(Coords a, const Coords& b) { return a += b; }
    friend Coords operator-(Coords a, const Coords& b) { return a -= b; }
    friend Coords operator*(const T& s, Coords a) { return a *= s; }
    friend Coords operator-(Coords a) {
        for (auto& x : a.v) x = -x;
        return a;
    }

    bool all_nonneg() const { return std::all_of(v.begin(), v.end(), [](const T& x) { return x >= 0; }); }
    bool all_negative() const { return std::all_of(v.begin(), v.end(), [](const T& x) { return x < 0; }); }
    bool is_zero() const { return std::all_of(v.begin(), v.end(), [](const T& x) { return x == 0; }); }

    friend std::ostream& operator<<(std::ostream& os, const Coords& c) {
        os << '(';
        for (std::size_t i = 0; i < c.v.size(); ++i) os << (i ? "," : "") << c.v[i];
        return os << ')';
    }

private:
    void check(const Coords& o) const {
        if (o.v.size() != v.size()) throw std::invalid_argument("coordinate length mismatch");
    }
};

struct WeightTag {};
struct CorootTag {};

/// Coordinates in the fundamental-weight basis: coords[j] = <lambda, alpha_j^vee>.
template <ExactInteger T = Int>
using BasicWeight = Coords<T, WeightTag>;
/// Coefficients in the simple-coroot basis.
template <ExactInteger T = Int>
using BasicCoroot = Coords<T, CorootTag>;

using Weight = BasicWeight<Int>;
using Coroot = BasicCoroot<Int>;

/// Small root vector in the simple-root (or simple-coroot) basis.
using RootVec = std::vector<int>;

/// Coefficientwise x <= y.
inline bool partial_order_leq(const RootVec& x, const RootVec& y) {
    if (x.size() != y.size()) throw std::invalid_argument("root vector length mismatch");
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i] > y[i]) return false;
    return true;
}

namespace detail {

// Closure of the simple roots under simple reflections, for the system whose
// reflection reads s_j(r) = r - (sum_i r_i m[i][j]) e_j.
inline std::vector<RootVec> positive_closure(const Matrix& m) {
    const int n = static_cast<int>(m.size());
    std::set<RootVec> seen;
    std::vector<RootVec> order, frontier;
    for (int j = 0; j < n; ++j) {
        RootVec e(n, 0);
        e[j] = 1;
        seen.insert(e);
        order.push_back(e);
        frontier.push_back(e);
    }
    while (!frontier.empty()) {
        std::vector<RootVec> next;
        for (const auto& r : frontier) {
            for (int j = 0; j < n; ++j) {
                int p = 0;
                for (int i = 0; i < n; ++i) p += r[i] * m[i][j];
                if (p == 0) continue;
                RootVec s = r;
                s[j] -= p;
                if (!std::all_of(s.begin(), s.end(), [](int x) { return x >= 0; })) continue;
                if (seen.insert(s).second) {
                    order.push_back(s);
                    next.push_back(s);
                }
            }
        }
        frontier.swap(next);
    }
    std::sort(order.begin(), order.end(), [](const RootVec& a, const RootVec& b) {
        int ha = 0, hb = 0;
        for (int x : a) ha += x;
        for (int x : b) hb += x;
        if (ha != hb) return ha < hb;
        return a > b;
    });
    return order;
}

inline Matrix transpose(const Matrix& m) {
    Matrix t(m.size(), std::vector<int>(m.size()));
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m.size(); ++j) t[j][i] = m[i][j];
    return t;
}

} // namespace detail

/// Product of simple components plus torus/trivial factors, with
/// block-diagonal Cartan data in Bourbaki numbering. Immutable.
class RootSystem {
public:
    RootSystem() = default;

    explicit RootSystem(std::vector<ComponentSpec> comps, BuildOptions opts = {}) : comps_(std::move(comps)) {
        int n = 0;
        bool any_simple = false;
        for (const auto& c : comps_) {
            offsets_.push_back(n);
            if (c.is_simple()) {
                any_simple = true;
                n += c.rank;
            }
        }
        if (!any_simple) throw RootSystemError("a root system needs at least one simple component");
        cartan_.assign(n, std::vector<int>(n, 0));
        for (std::size_t k = 0; k < comps_.size(); ++k) {
            if (!comps_[k].is_simple()) continue;
            auto b = cartan_block(comps_[k].letter, comps_[k].rank, opts);
            for (int i = 0; i < comps_[k].rank; ++i) {
                component_of_.push_back(static_cast<int>(k));
                for (int j = 0; j < comps_[k].rank; ++j) cartan_[offsets_[k] + i][offsets_[k] + j] = b[i][j];
            }
        }
        roots_ = detail::positive_closure(cartan_);
        coroots_ = detail::positive_closure(detail::transpose(cartan_));
    }

    int rank() const { return static_cast<int>(cartan_.size()); }
    const std::vector<ComponentSpec>& components() const { return comps_; }
    const Matrix& cartan_matrix() const { return cartan_; }

    /// <alpha_i, alpha_j^vee>, 0-based global indices.
    int cartan(int i, int j) const { return cartan_.at(i).at(j); }

    bool linked(int i, int j) const { return i != j && cartan(i, j) != 0; }

    /// Global 0-based index of the local Bourbaki label (1-based) inside component k (0-based).
    int global_index(int k, int local) const {
        if (k < 0 || k >= static_cast<int>(comps_.size())) throw RootSystemError("no component " + std::to_string(k + 1));
        const auto& c = comps_[k];
        if (!c.is_simple()) throw RootSystemError("component " + c.name() + " has no simple roots");
        if (local < 1 || local > c.rank)
            throw RootSystemError("label " + std::to_string(local) + " out of range for " + c.name());
        return offsets_[k] + local - 1;
    }
    int component_of(int j) const { return component_of_.at(j); }
    int local_label(int j) const { return j - offsets_[component_of(j)] + 1; }

    const std::vector<RootVec>& positive_roots() const { return roots_; }
    const std::vector<RootVec>& positive_coroots() const { return coroots_; }

    /// Positive roots whose support lies in `subset`.
    std::vector<RootVec> positive_roots_on(const std::vector<int>& subset) const {
        std::vector<bool> in(rank(), false);
        for (int j : subset) in.at(j) = true;
        std::vector<RootVec> out;
        for (const auto& r : roots_) {
            bool ok = true;
            for (int i = 0; i < rank() && ok; ++i)
                if (r[i] != 0 && !in[i]) ok = false;
            if (ok) out.push_back(r);
        }
        return out;
    }

    /// Degree-one node of its component's Dynkin diagram.
    bool extremal(int j) const {
        int deg = 0;
        for (int i = 0; i < rank(); ++i)
            if (linked(i, j)) ++deg;
        return deg <= 1;
    }

    std::string name() const {
        std::string s;
        for (std::size_t k = 0; k < comps_.size(); ++k) {
            if (k) s += "x";
            s += comps_[k].name();
        }
        return s;
    }

    friend bool operator==(const RootSystem& a, const RootSystem& b) { return a.comps_ == b.comps_; }

private:
    std::vector<ComponentSpec> comps_;
    std::vector<int> offsets_;
    std::vector<int> component_of_;
    Matrix cartan_;
    std::vector<RootVec> roots_;
    std::vector<RootVec> coroots_;
};

template <ExactInteger T = Int>
BasicWeight<T> zero_weight(const RootSystem& rs) {
    return BasicWeight<T>(static_cast<std::size_t>(rs.rank()));
}

template <ExactInteger T = Int>
BasicWeight<T> fundamental_weight(const RootSystem& rs, int j) {
    auto w = zero_weight<T>(rs);
    w[j] = 1;
    return w;
}

template <ExactInteger T = Int>
BasicWeight<T> rho(const RootSystem& rs) {
    BasicWeight<T> w(std::vector<T>(rs.rank(), T(1)));
    return w;
}

/// alpha_j in the fundamental-weight basis: coordinate k is <alpha_j, alpha_k^vee>.
template <ExactInteger T = Int>
BasicWeight<T> simple_root_as_weight(const RootSystem& rs, int j) {
    auto w = zero_weight<T>(rs);
    for (int k = 0; k < rs.rank(); ++k) w[k] = rs.cartan(j, k);
    return w;
}

template <ExactInteger T = Int>
BasicCoroot<T> simple_coroot(const RootSystem& rs, int j) {
    BasicCoroot<T> c(static_cast<std::size_t>(rs.rank()));
    c[j] = 1;
    return c;
}

template <ExactInteger T = Int>
BasicCoroot<T> to_coroot(const RootVec& r) {
    BasicCoroot<T> c(r.size());
    for (std::size_t i = 0; i < r.size(); ++i) c[i] = r[i];
    return c;
}

template <ExactInteger T>
T pairing(const BasicWeight<T>& lambda, const BasicCoroot<T>& c) {
    if (lambda.size() != c.size()) throw std::invalid_argument("pairing: dimension mismatch");
    T s = 0;
    for (std::size_t j = 0; j < c.size(); ++j) s += lambda[j] * c[j];
    return s;
}

template <ExactInteger T>
T pairing(const BasicWeight<T>& lambda, const RootVec& c) {
    if (lambda.size() != c.size()) throw std::invalid_argument("pairing: dimension mismatch");
    T s = 0;
    for (std::size_t j = 0; j < c.size(); ++j)
        if (c[j]) s += lambda[j] * c[j];
    return s;
}

/// s_j(lambda) = lambda - <lambda, alpha_j^vee> alpha_j.
template <ExactInteger T>
BasicWeight<T> reflect_weight(const RootSystem& rs, int j, BasicWeight<T> lambda) {
    const T p = lambda[j];
    if (p == 0) return lambda;
    for (int k = 0; k < rs.rank(); ++k) {
        const int a = rs.cartan(j, k);
        if (a) lambda[k] -= p * a;
    }
    return lambda;
}

/// s_j(c) = c - <alpha_j, c> alpha_j^vee.
template <ExactInteger T>
BasicCoroot<T> reflect_coroot(const RootSystem& rs, int j, BasicCoroot<T> c) {
    T p = 0;
    for (int k = 0; k < rs.rank(); ++k) {
        const int a = rs.cartan(j, k);
        if (a) p += c[k] * a;
    }
    c[j] -= p;
    return c;
}

} // namespace hororigid
