#pragma once

#include <optional>
#include <string>

#include "root_system.hpp"

namespace hororigid {

/// A simple root by global index, or the imaginary marker.
struct RootRef {
    bool imaginary = false;
    int index = -1;

    static RootRef concrete(int j) { return {false, j}; }
    static RootRef none() { return {true, -1}; }

    bool is(int j) const { return !imaginary && index == j; }
    friend bool operator==(const RootRef&, const RootRef&) = default;
    friend auto operator<=>(const RootRef&, const RootRef&) = default;
};

class DatumError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// (G, beta, alpha_0, alpha_1, a_1).
struct HorosphericalDatum {
    RootSystem rs;
    int beta = 0;
    RootRef alpha0;
    RootRef alpha1;
    Int a1 = 0;
    std::optional<std::string> case_label;

    void validate() const {
        const auto& comps = rs.components();
        if (comps.empty() || !comps.front().is_simple()) throw DatumError("the first factor G0 must be simple");
        if (beta < 0 || beta >= rs.rank()) throw DatumError("beta out of range");
        if (rs.component_of(beta) != 0) throw DatumError("beta must lie in the first factor G0");
        auto check = [&](const RootRef& r, const char* name) {
            if (!r.imaginary && (r.index < 0 || r.index >= rs.rank()))
                throw DatumError(std::string(name) + " out of range");
        };
        check(alpha0, "alpha0");
        check(alpha1, "alpha1");
        if (alpha0.is(beta) || alpha1.is(beta)) throw DatumError("alpha0/alpha1 must differ from beta");
        if (!alpha0.imaginary && alpha0 == alpha1) throw DatumError("alpha0 and alpha1 must differ");
        auto has = [&](ComponentKind k) {
            for (const auto& c : comps)
                if (c.kind == k) return true;
            return false;
        };
        if (alpha0.imaginary && !has(ComponentKind::Trivial))
            throw DatumError("imaginary alpha0 needs a trivial factor '-'");
        if (alpha1.imaginary && !has(ComponentKind::Torus))
            throw DatumError("imaginary alpha1 needs a torus factor 'C*'");
        if (a1 < 0) throw DatumError("a1 must be non-negative");
    }

    /// Same data with alpha0 and alpha1 exchanged; trivial and torus factors trade places.
    HorosphericalDatum swapped() const {
        std::vector<ComponentSpec> comps = rs.components();
        for (auto& c : comps) {
            if (c.kind == ComponentKind::Trivial) c = ComponentSpec::torus();
            else if (c.kind == ComponentKind::Torus) c = ComponentSpec::trivial();
        }
        HorosphericalDatum out = *this;
        out.rs = RootSystem(std::move(comps), BuildOptions{true});
        std::swap(out.alpha0, out.alpha1);
        out.case_label.reset();
        return out;
    }

    /// Identity of the datum without a1 or label.
    std::string key() const { return key_under({}); }

    /// Smallest key over Dynkin diagram automorphisms of every factor, with C2
    /// written as B2, so isomorphic data share it.
    std::string canonical_key() const {
        for (std::size_t k = 0; k < rs.components().size(); ++k) {
            const auto& c = rs.components()[k];
            if (c.is_simple() && c.letter == 'C' && c.rank == 2) return c2_as_b2(static_cast<int>(k)).canonical_key();
        }
        const auto& comps = rs.components();
        std::vector<std::vector<std::vector<int>>> autos;
        for (const auto& c : comps)
            autos.push_back(c.is_simple() ? diagram_automorphisms(c.letter, c.rank) : std::vector<std::vector<int>>{{0}});
        std::vector<std::size_t> pick(comps.size(), 0);
        std::string best;
        while (true) {
            std::vector<int> perm(rs.rank());
            for (int j = 0; j < rs.rank(); ++j) {
                const int k = rs.component_of(j);
                perm[j] = rs.global_index(k, autos[k][pick[k]][rs.local_label(j)]);
            }
            const auto key = key_under(perm);
            if (best.empty() || key < best) best = key;
            std::size_t k = 0;
            while (k < pick.size() && ++pick[k] == autos[k].size()) pick[k++] = 0;
            if (k == pick.size()) break;
        }
        return best;
    }

private:
    HorosphericalDatum c2_as_b2(int k) const {
        auto comps = rs.components();
        comps[k] = ComponentSpec::simple('B', 2);
        const int first = rs.global_index(k, 1), second = rs.global_index(k, 2);
        auto flip = [&](int j) { return j == first ? second : j == second ? first : j; };
        HorosphericalDatum out = *this;
        out.rs = RootSystem(std::move(comps), BuildOptions{true});
        out.beta = flip(beta);
        if (!out.alpha0.imaginary) out.alpha0.index = flip(alpha0.index);
        if (!out.alpha1.imaginary) out.alpha1.index = flip(alpha1.index);
        return out;
    }

    std::string key_under(const std::vector<int>& perm) const {
        auto map = [&](int j) { return perm.empty() ? j : perm[j]; };
        auto ref = [&](const RootRef& r) { return r.imaginary ? std::string("im") : std::to_string(map(r.index) + 1); };
        return rs.name() + "|" + std::to_string(map(beta) + 1) + "|" + ref(alpha0) + "|" + ref(alpha1);
    }
};

} // namespace hororigid
