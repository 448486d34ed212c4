#include "fsc/symbolic/to_expr.hpp"

#include <map>
#include <unordered_map>

namespace fsc::symbolic {

namespace {

class Printer {
public:
    explicit Printer(SymbolicModel& sm) : sm_(sm), m_(sm.model()) {
        const auto& vars = sm.variables();
        for (std::size_t v = 0; v < vars.size(); ++v)
            for (unsigned b : vars[v].bits) {
                if (bit_var_.size() <= b) bit_var_.resize(b + 1, -1);
                bit_var_[b] = static_cast<int>(v);
            }
    }

    ExprPtr operator()(const Bdd& f) {
        if (f.is_true()) return Expr::constant(true);
        if (f.is_false()) return Expr::constant(false);
        auto it = memo_.find(f.id());
        if (it != memo_.end()) return it->second;

        bdd::Manager& mgr = sm_.manager();
        unsigned bit = mgr.node_var(f.id()) / 2;
        int var = bit_var_.at(bit);
        const auto& v = sm_.variables()[var];

        // cofactor per value, grouped by result
        std::vector<std::pair<Bdd, std::vector<std::int64_t>>> groups;
        for (std::uint64_t code = 0; code < v.size; ++code) {
            Bdd g = f;
            for (std::size_t i = 0; i < v.bits.size(); ++i)
                g = mgr.cofactor(g, SymbolicModel::cur(v.bits[i]), (code >> (v.bits.size() - 1 - i)) & 1);
            std::int64_t value = v.lo + static_cast<std::int64_t>(code);
            auto pos = std::find_if(groups.begin(), groups.end(), [&](const auto& x) { return x.first == g; });
            if (pos == groups.end()) groups.push_back({g, {value}});
            else pos->second.push_back(value);
        }
        ExprPtr out;
        if (groups.size() == 1) {
            out = (*this)(groups[0].first);
        } else {
            std::vector<ExprPtr> terms;
            for (const auto& [g, values] : groups) {
                if (g.is_false()) continue;
                ExprPtr cond = member(var, values);
                terms.push_back(g.is_true() ? cond : Expr::binary(BinaryOp::And, cond, (*this)(g)));
            }
            out = disjunction(terms);
        }
        memo_.emplace(f.id(), out);
        keep_.push_back(f);
        return out;
    }

private:
    ExprPtr equals(int var, std::int64_t value) {
        const auto& v = sm_.variables()[var];
        if (v.automaton >= 0) return Expr::loc(v.automaton, static_cast<int>(value));
        const DiscVar& d = m_.discs[v.disc];
        if (d.type.is_bool()) return value ? Expr::disc(v.disc, d.type) : Expr::negation(Expr::disc(v.disc, d.type));
        return Expr::binary(BinaryOp::Equal, Expr::disc(v.disc, d.type), Expr::constant(value, d.type));
    }

    /// `var` takes one of `values`; values are sorted ascending.
    ExprPtr member(int var, const std::vector<std::int64_t>& values) {
        const auto& v = sm_.variables()[var];
        std::vector<std::int64_t> others;
        for (std::uint64_t c = 0; c < v.size; ++c) {
            std::int64_t x = v.lo + static_cast<std::int64_t>(c);
            if (!std::binary_search(values.begin(), values.end(), x)) others.push_back(x);
        }
        if (others.empty()) return Expr::constant(true);
        if (values.size() == 1) return equals(var, values[0]);
        if (others.size() == 1) {
            if (v.disc >= 0 && !m_.discs[v.disc].type.is_bool()) {
                const Type& t = m_.discs[v.disc].type;
                return Expr::binary(BinaryOp::NotEqual, Expr::disc(v.disc, t), Expr::constant(others[0], t));
            }
            return Expr::negation(equals(var, others[0]));
        }
        if (v.disc >= 0 && m_.discs[v.disc].type.is_int()) {
            // runs of consecutive values as ranges
            const Type& t = m_.discs[v.disc].type;
            ExprPtr x = Expr::disc(v.disc, t);
            std::vector<ExprPtr> runs;
            for (std::size_t i = 0; i < values.size();) {
                std::size_t j = i;
                while (j + 1 < values.size() && values[j + 1] == values[j] + 1) ++j;
                std::int64_t a = values[i], b = values[j];
                if (a == b) runs.push_back(Expr::binary(BinaryOp::Equal, x, Expr::constant(a, t)));
                else if (a == t.lo) runs.push_back(Expr::binary(BinaryOp::LessEq, x, Expr::constant(b, t)));
                else if (b == t.hi) runs.push_back(Expr::binary(BinaryOp::GreaterEq, x, Expr::constant(a, t)));
                else
                    runs.push_back(Expr::binary(BinaryOp::And, Expr::binary(BinaryOp::GreaterEq, x, Expr::constant(a, t)),
                                                Expr::binary(BinaryOp::LessEq, x, Expr::constant(b, t))));
                i = j + 1;
            }
            return disjunction(runs);
        }
        if (others.size() < values.size()) {
            std::vector<ExprPtr> parts;
            for (std::int64_t o : others) parts.push_back(Expr::negation(equals(var, o)));
            return conjunction(parts);
        }
        std::vector<ExprPtr> parts;
        for (std::int64_t x : values) parts.push_back(equals(var, x));
        return disjunction(parts);
    }

    SymbolicModel& sm_;
    const Model& m_;
    std::vector<int> bit_var_;
    std::unordered_map<bdd::NodeId, ExprPtr> memo_;
    std::vector<Bdd> keep_;
};

}  // namespace

ExprPtr to_expr(SymbolicModel& sm, const Bdd& f) { return Printer(sm)(f); }

}  // namespace fsc::symbolic
