#pragma once

// Finite groups from permutation generators: breadth-first closure,
// multiplication (dense table below 256 elements, composed on demand above),
// conjugacy classes in a canonical order, element orders and the exponent.

#include <cstdint>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "surfhom/errors.hpp"
#include "surfhom/permutation.hpp"

namespace surfhom {

inline constexpr std::size_t kDefaultOrderCap = 2000;
inline constexpr std::size_t kDenseTableLimit = 256;

struct GroupSpec {
    enum class Kind { Builtin, Generators };
    Kind kind = Kind::Builtin;
    std::string name;  // sym | alt | dih | cyc | q8
    unsigned param = 0;
    std::vector<Permutation> generators;
    std::string text;  // original spec string, echoed by the CLI
};

class FiniteGroup {
public:
    std::size_t order() const { return elements_.size(); }
    std::size_t degree() const { return elements_.empty() ? 0 : elements_[0].degree(); }
    unsigned long exponent() const { return exponent_; }
    int identity() const { return 0; }

    const Permutation& element(int i) const { return elements_[static_cast<std::size_t>(i)]; }

    int index_of(const Permutation& p) const {
        auto it = index_.find(p);
        return it == index_.end() ? -1 : it->second;
    }

    int mul(int a, int b) const {
        if (!mul_table_.empty())
            return mul_table_[static_cast<std::size_t>(a) * order() + static_cast<std::size_t>(b)];
        return index_.at(elements_[static_cast<std::size_t>(a)].compose(elements_[static_cast<std::size_t>(b)]));
    }

    int inv(int a) const { return inverse_[static_cast<std::size_t>(a)]; }

    int pow(int a, long long n) const {
        if (n < 0) return pow(inv(a), -n);
        int acc = identity();
        int base = a;
        unsigned long long e = static_cast<unsigned long long>(n);
        while (e) {
            if (e & 1) acc = mul(acc, base);
            base = mul(base, base);
            e >>= 1;
        }
        return acc;
    }

    unsigned long element_order(int a) const {
        unsigned long ord = 1;
        int x = a;
        while (x != identity()) {
            x = mul(x, a);
            ++ord;
        }
        return ord;
    }

    friend FiniteGroup build_group(const GroupSpec& spec, std::size_t order_cap);

private:
    std::vector<Permutation> elements_;
    std::unordered_map<Permutation, int, PermutationHash> index_;
    std::vector<int> inverse_;
    std::vector<std::uint16_t> mul_table_;  // empty when order > kDenseTableLimit
    unsigned long exponent_ = 1;
};

namespace detail {

inline std::vector<Permutation> builtin_generators(const std::string& name, unsigned n) {
    auto cycle_n = [](unsigned m) {
        std::vector<std::uint32_t> img(m);
        for (unsigned i = 0; i < m; ++i) img[i] = (i + 1) % m;
        return Permutation(std::move(img));
    };
    if (name == "sym") {
        if (n == 0) throw GroupSpecError("sym requires parameter >= 1");
        if (n == 1) return {Permutation::identity(1)};
        std::vector<std::uint32_t> swap01(n);
        std::iota(swap01.begin(), swap01.end(), 0u);
        std::swap(swap01[0], swap01[1]);
        return {Permutation(std::move(swap01)), cycle_n(n)};
    }
    if (name == "alt") {
        if (n == 0) throw GroupSpecError("alt requires parameter >= 1");
        if (n <= 2) return {Permutation::identity(std::max(n, 1u))};
        std::vector<std::uint32_t> three(n);
        std::iota(three.begin(), three.end(), 0u);
        three[0] = 1; three[1] = 2; three[2] = 0;
        Permutation c3(std::move(three));
        if (n == 3) return {c3};
        if (n % 2 == 1) return {c3, cycle_n(n)};
        // even n: 3-cycle together with an (n-1)-cycle fixing point 0
        std::vector<std::uint32_t> img(n);
        img[0] = 0;
        for (unsigned i = 1; i < n; ++i) img[i] = i % (n - 1) + 1;
        return {c3, Permutation(std::move(img))};
    }
    if (name == "dih") {
        if (n == 0) throw GroupSpecError("dih requires parameter >= 1");
        if (n == 1) return {Permutation({1, 0})};
        if (n == 2) return {Permutation({1, 0, 2, 3}), Permutation({0, 1, 3, 2})};
        std::vector<std::uint32_t> refl(n);
        for (unsigned i = 0; i < n; ++i) refl[i] = (n - i) % n;
        return {cycle_n(n), Permutation(std::move(refl))};
    }
    if (name == "cyc") {
        if (n == 0) throw GroupSpecError("cyc requires parameter >= 1");
        if (n == 1) return {Permutation::identity(1)};
        return {cycle_n(n)};
    }
    if (name == "q8") {
        // left multiplication by i and j on {1,-1,i,-i,j,-j,k,-k}
        return {Permutation({2, 3, 1, 0, 6, 7, 5, 4}),
                Permutation({4, 5, 7, 6, 1, 0, 2, 3})};
    }
    throw GroupSpecError("unknown builtin group '" + name + "'");
}

}  // namespace detail

inline GroupSpec parse_group_spec(const std::string& text) {
    GroupSpec spec;
    spec.text = text;
    if (text.rfind("builtin:", 0) == 0) {
        spec.kind = GroupSpec::Kind::Builtin;
        std::string rest = text.substr(8);
        auto colon = rest.find(':');
        spec.name = rest.substr(0, colon);
        if (spec.name != "sym" && spec.name != "alt" && spec.name != "dih" &&
            spec.name != "cyc" && spec.name != "q8")
            throw GroupSpecError("unknown builtin group '" + spec.name + "'");
        if (colon != std::string::npos) {
            std::string param = rest.substr(colon + 1);
            try {
                spec.param = static_cast<unsigned>(std::stoul(param));
            } catch (...) {
                throw GroupSpecError("bad builtin parameter '" + param + "'");
            }
        } else if (spec.name != "q8") {
            throw GroupSpecError("builtin '" + spec.name + "' requires a parameter");
        }
        return spec;
    }
    if (text.rfind("perms:", 0) == 0) {
        spec.kind = GroupSpec::Kind::Generators;
        std::istringstream lines(text.substr(6));
        std::string line;
        std::size_t degree = 0;
        std::vector<std::string> raw;
        while (std::getline(lines, line)) {
            if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
            raw.push_back(line);
        }
        if (raw.empty()) throw GroupSpecError("perms: spec lists no generators");
        for (const auto& r : raw) {
            Permutation p = Permutation::parse_cycles(r);
            degree = std::max(degree, p.degree());
            spec.generators.push_back(std::move(p));
        }
        for (auto& g : spec.generators) g = g.extended(degree);
        return spec;
    }
    throw GroupSpecError("group spec must start with 'builtin:' or 'perms:'");
}

inline FiniteGroup build_group(const GroupSpec& spec, std::size_t order_cap = kDefaultOrderCap) {
    std::vector<Permutation> gens = spec.kind == GroupSpec::Kind::Builtin
                                        ? detail::builtin_generators(spec.name, spec.param)
                                        : spec.generators;
    if (gens.empty()) throw GroupSpecError("no generators");
    std::size_t degree = 0;
    for (const auto& g : gens) degree = std::max(degree, g.degree());
    for (auto& g : gens) g = g.extended(degree);

    FiniteGroup G;
    G.elements_.push_back(Permutation::identity(degree));
    G.index_.emplace(G.elements_[0], 0);
    for (std::size_t head = 0; head < G.elements_.size(); ++head) {
        for (const auto& g : gens) {
            Permutation next = G.elements_[head].compose(g);
            if (G.index_.emplace(next, static_cast<int>(G.elements_.size())).second) {
                G.elements_.push_back(std::move(next));
                if (G.elements_.size() > order_cap)
                    throw OrderCapExceeded("group order exceeds cap of " + std::to_string(order_cap));
            }
        }
    }

    G.inverse_.resize(G.order());
    for (std::size_t i = 0; i < G.order(); ++i)
        G.inverse_[i] = G.index_.at(G.elements_[i].inverse());

    if (G.order() <= kDenseTableLimit) {
        G.mul_table_.resize(G.order() * G.order());
        for (std::size_t a = 0; a < G.order(); ++a)
            for (std::size_t b = 0; b < G.order(); ++b)
                G.mul_table_[a * G.order() + b] =
                    static_cast<std::uint16_t>(G.index_.at(G.elements_[a].compose(G.elements_[b])));
    }

    unsigned long expo = 1;
    for (std::size_t i = 0; i < G.order(); ++i)
        expo = std::lcm(expo, G.element_order(static_cast<int>(i)));
    G.exponent_ = expo;
    return G;
}

inline FiniteGroup build_group(const std::string& spec_text, std::size_t order_cap = kDefaultOrderCap) {
    return build_group(parse_group_spec(spec_text), order_cap);
}

inline unsigned long exponent(const FiniteGroup& G) { return G.exponent(); }

struct ConjugacyClass {
    int representative = 0;          // least member index
    std::vector<int> members;        // ascending element indices
    std::size_t size() const { return members.size(); }
};

class ConjugacyClassTable {
public:
    explicit ConjugacyClassTable(std::vector<ConjugacyClass> classes, std::size_t order)
        : classes_(std::move(classes)), class_of_(order, -1) {
        for (std::size_t c = 0; c < classes_.size(); ++c)
            for (int m : classes_[c].members) class_of_[static_cast<std::size_t>(m)] = static_cast<int>(c);
    }

    std::size_t count() const { return classes_.size(); }
    const ConjugacyClass& cls(int i) const { return classes_[static_cast<std::size_t>(i)]; }
    int class_of(int element) const { return class_of_[static_cast<std::size_t>(element)]; }

    int inverse_class(const FiniteGroup& G, int i) const {
        return class_of(G.inv(classes_[static_cast<std::size_t>(i)].representative));
    }

private:
    std::vector<ConjugacyClass> classes_;
    std::vector<int> class_of_;
};

// Conjugation orbits; canonical order is identity class first, then ascending
// size, ties broken by the least member's element index.
inline ConjugacyClassTable conjugacy_classes(const FiniteGroup& G) {
    const std::size_t n = G.order();
    std::vector<int> cls(n, -1);
    std::vector<ConjugacyClass> classes;
    for (std::size_t start = 0; start < n; ++start) {
        if (cls[start] >= 0) continue;
        int id = static_cast<int>(classes.size());
        std::vector<int> orbit{static_cast<int>(start)};
        cls[start] = id;
        for (std::size_t head = 0; head < orbit.size(); ++head) {
            for (std::size_t g = 0; g < n; ++g) {
                int c = G.mul(G.mul(static_cast<int>(g), orbit[head]), G.inv(static_cast<int>(g)));
                if (cls[static_cast<std::size_t>(c)] < 0) {
                    cls[static_cast<std::size_t>(c)] = id;
                    orbit.push_back(c);
                }
            }
        }
        std::sort(orbit.begin(), orbit.end());
        ConjugacyClass cc;
        cc.representative = orbit.front();
        cc.members = std::move(orbit);
        classes.push_back(std::move(cc));
    }
    std::sort(classes.begin(), classes.end(), [](const ConjugacyClass& a, const ConjugacyClass& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a.representative < b.representative;
    });
    return ConjugacyClassTable(std::move(classes), n);
}

}  // namespace surfhom
