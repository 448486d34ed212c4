#include "random_model.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <vector>

namespace fsc::testing {

namespace {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : g_(seed) {}
    int between(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(g_); }
    bool chance(double p) { return std::bernoulli_distribution(p)(g_); }
    template <class T>
    const T& pick(const std::vector<T>& v) { return v[static_cast<std::size_t>(between(0, static_cast<int>(v.size()) - 1))]; }

private:
    std::mt19937_64 g_;
};

struct Plant {
    std::string name;
    int locations = 2;
    bool counter = false;

    std::string loc(int i) const { return name + ".L" + std::to_string(i); }
};

}  // namespace

std::string random_model(std::uint64_t seed) {
    Rng r(seed);
    std::vector<std::string> controllable, uncontrollable, events;
    for (int i = 0, n = r.between(1, 3); i < n; ++i) controllable.push_back("c" + std::to_string(i));
    for (int i = 0, n = r.between(1, 3); i < n; ++i) uncontrollable.push_back("u" + std::to_string(i));
    events = controllable;
    events.insert(events.end(), uncontrollable.begin(), uncontrollable.end());

    std::ostringstream out;
    auto list = [](const std::vector<std::string>& v) {
        std::string s;
        for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i];
        return s;
    };
    out << "controllable " << list(controllable) << ";\n";
    out << "uncontrollable " << list(uncontrollable) << ";\n";

    std::vector<Plant> plants;
    for (int i = 0, n = r.between(1, 3); i < n; ++i) plants.push_back({"P" + std::to_string(i), r.between(2, 4), r.chance(0.4)});
    std::vector<std::string> locs;
    for (const auto& p : plants)
        for (int l = 0; l < p.locations; ++l) locs.push_back(p.loc(l));
    // a pair of non-initial locations, from different plants when possible
    auto forbidden_pair = [&] {
        const Plant& a = r.pick(plants);
        const Plant& b = r.pick(plants);
        std::string first = a.loc(r.between(1, a.locations - 1));
        if (&a == &b) return "not " + first;
        return "not(" + first + " and " + b.loc(r.between(1, b.locations - 1)) + ")";
    };

    for (const auto& p : plants) {
        out << "plant automaton " << p.name << ":\n";
        if (p.counter) out << "  disc int[0..2] x = " << r.between(0, 2) << ";\n";
        std::vector<std::string> alphabet;
        for (const auto& e : events)
            if (r.chance(0.6)) alphabet.push_back(e);
        if (alphabet.empty()) alphabet.push_back(r.pick(events));
        std::vector<char> marked(p.locations);
        bool any = false;
        for (auto& m : marked) any |= (m = r.chance(0.6));
        if (!any) marked[r.between(0, p.locations - 1)] = 1;
        // private controllable event leading back towards a marked location
        const std::string home = "k" + p.name.substr(1);
        std::vector<int> marked_locs;
        for (int l = 0; l < p.locations; ++l)
            if (marked[l]) marked_locs.push_back(l);
        out << "  controllable " << home << ";\n";
        out << "  alphabet " << list(alphabet) << ", " << home << ";\n";
        for (int l = 0; l < p.locations; ++l) {
            out << "  location L" << l << ":\n";
            if (l == 0) out << "    initial;\n";
            if (marked[l]) out << "    marked;\n";
            if (!marked[l] && r.chance(0.8)) out << "    edge " << home << " goto L" << r.pick(marked_locs) << ";\n";
            for (const auto& e : alphabet) {
                int copies = r.chance(0.7) ? 1 : 0;
                if (copies && r.chance(0.15)) copies = 2;  // nondeterministic choice
                for (int k = 0; k < copies; ++k) {
                    std::vector<std::string> guards;
                    std::string update;
                    if (r.chance(0.15) && plants.size() > 1) {
                        const Plant& other = r.pick(plants);
                        if (other.name != p.name)
                            guards.push_back(std::string(r.chance(0.5) ? "" : "not ") + other.loc(r.between(0, other.locations - 1)));
                    }
                    if (p.counter && r.chance(0.4)) {
                        switch (r.between(0, 2)) {
                            case 0: guards.push_back("x < 2"), update = "x := x + 1"; break;
                            case 1: guards.push_back("x > 0"), update = "x := x - 1"; break;
                            default: update = "x := 0"; break;
                        }
                    }
                    out << "    edge " << e;
                    if (!guards.empty()) out << " when " << guards.front() << (guards.size() > 1 ? " and " + guards.back() : "");
                    if (!update.empty()) out << " do " << update;
                    int target = r.between(0, p.locations - 1);
                    if (target != l) out << " goto L" << target;
                    out << ";\n";
                }
            }
        }
        out << "end\n";
    }

    if (plants.size() > 1 && r.chance(0.2)) out << "plant invariant " << forbidden_pair() << ";\n";

    for (int i = 0, n = r.between(0, 2); i < n; ++i) {
        if (r.chance(0.3)) {
            const Plant& p = r.pick(plants);
            if (p.counter) {
                out << "requirement " << p.name << ".x <= 1 or not " << p.loc(r.between(0, p.locations - 1)) << ";\n";
                continue;
            }
        }
        out << "requirement " << forbidden_pair() << ";\n";
    }
    for (int i = 0, n = r.between(0, 2); i < n; ++i)
        out << "requirement " << r.pick(r.chance(0.9) ? controllable : uncontrollable) << " needs " << (r.chance(0.5) ? "not " : "")
            << r.pick(locs) << ";\n";
    if (r.chance(0.4)) {
        out << "requirement automaton R:\n  location A:\n    initial;\n    marked;\n";
        // b only after a; a stays possible everywhere unless harsh
        std::string a = r.pick(events), b = r.pick(controllable);
        bool harsh = r.chance(0.2);
        out << "    edge " << a << " goto B;\n  location B:\n";
        if (r.chance(0.5)) out << "    marked;\n";
        if (a != b) {
            if (!harsh) out << "    edge " << a << ";\n";
            out << "    edge " << b << " goto A;\n";
        } else {
            out << "    edge " << a << " goto A;\n";
        }
        out << "end\n";
    }
    return out.str();
}

feature::FeatureModel random_feature_model(std::uint64_t seed, int max_features) {
    using Kind = feature::ConstraintKind;
    Rng r(seed);
    const int n = r.between(2, std::max(2, max_features));
    feature::FeatureModel fm;
    for (int i = 0; i < n; ++i) fm.features.push_back({"F" + std::to_string(i), {}, {}});
    fm.constraints.push_back({Kind::Root, "F0", {}, {}});

    std::vector<std::vector<int>> children(n);
    for (int i = 1; i < n; ++i) children[r.between(0, i - 1)].push_back(i);
    for (int p = 0; p < n; ++p) {
        std::vector<int> rest = children[p];
        while (!rest.empty()) {
            int k = r.between(0, 3);
            const std::string parent = fm.features[p].name;
            if (k <= 1) {
                fm.constraints.push_back({k == 0 ? Kind::Mandatory : Kind::Optional, parent, {fm.features[rest.back()].name}, {}});
                rest.pop_back();
                continue;
            }
            int take = r.between(1, static_cast<int>(rest.size()));
            feature::Constraint c{k == 2 ? Kind::Alternative : Kind::Or, parent, {}, {}};
            for (int t = 0; t < take; ++t) {
                c.children.push_back(fm.features[rest.back()].name);
                rest.pop_back();
            }
            fm.constraints.push_back(std::move(c));
        }
    }
    for (int i = 0, m = r.between(0, 3); i < m; ++i) {
        int a = r.between(1, n - 1), b = r.between(1, n - 1);
        if (a == b) continue;
        fm.constraints.push_back({r.chance(0.5) ? Kind::Requires : Kind::Excludes, fm.features[a].name, {fm.features[b].name}, {}});
    }
    return fm;
}

bool constraint_holds(const feature::FeatureModel& fm, const feature::Constraint& c, std::uint64_t config) {
    using Kind = feature::ConstraintKind;
    auto on = [&](const std::string& name) { return ((config >> fm.find(name)) & 1u) != 0; };
    const bool parent = on(c.parent);
    int present = 0;
    for (const auto& ch : c.children) present += on(ch);
    const int total = static_cast<int>(c.children.size());
    switch (c.kind) {
        case Kind::Root: return parent;
        case Kind::Mandatory: return present == (parent ? total : 0);
        case Kind::Optional: return parent || present == 0;
        case Kind::Alternative: return parent ? present == 1 : present == 0;
        case Kind::Or: return parent ? present >= 1 : present == 0;
        case Kind::Requires: return !parent || present == total;
        case Kind::Excludes: return !parent || present == 0;
    }
    return false;
}

std::uint64_t brute_force_configurations(const feature::FeatureModel& fm) {
    const std::uint64_t n = fm.features.size();
    std::uint64_t count = 0;
    for (std::uint64_t c = 0; c < (std::uint64_t{1} << n); ++c) {
        bool ok = true;
        for (const auto& k : fm.constraints) ok = ok && constraint_holds(fm, k, c);
        count += ok;
    }
    return count;
}

}  // namespace fsc::testing
