#include "fsc/feature/feature_model.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "fsc/lang/printer.hpp"

namespace fsc::feature {

using lang::AstExpr;
using lang::BinaryOp;
using lang::UnaryOp;
using lang::AutomatonKind;

const Attribute* Feature::attribute(const std::string& attr) const {
    for (const auto& a : attributes)
        if (a.name == attr) return &a;
    return nullptr;
}

int FeatureModel::find(const std::string& name) const {
    for (std::size_t i = 0; i < features.size(); ++i)
        if (features[i].name == name) return static_cast<int>(i);
    return -1;
}

std::string FeatureModel::root() const {
    for (const auto& c : constraints)
        if (c.kind == ConstraintKind::Root) return c.parent;
    return {};
}

Reconfig ReconfigMode::mode_of(const std::string& feature) const {
    auto it = per_feature.find(feature);
    return it == per_feature.end() ? default_mode : it->second;
}

bool ReconfigMode::is_static() const {
    if (!swaps.empty() || default_mode != Reconfig::Static) return false;
    for (const auto& [name, m] : per_feature)
        if (m != Reconfig::Static) return false;
    return true;
}

namespace {

bool pairwise(ConstraintKind k) {
    return k == ConstraintKind::Mandatory || k == ConstraintKind::Optional || k == ConstraintKind::Requires ||
           k == ConstraintKind::Excludes;
}

bool decomposition(ConstraintKind k) {
    return k == ConstraintKind::Mandatory || k == ConstraintKind::Optional || k == ConstraintKind::Alternative ||
           k == ConstraintKind::Or;
}

std::string kind_name(ConstraintKind k) {
    switch (k) {
        case ConstraintKind::Root: return "root";
        case ConstraintKind::Mandatory: return "mandatory";
        case ConstraintKind::Optional: return "optional";
        case ConstraintKind::Alternative: return "alternative";
        case ConstraintKind::Or: return "or";
        case ConstraintKind::Requires: return "requires";
        case ConstraintKind::Excludes: return "excludes";
    }
    return "?";
}

Reconfig to_reconfig(lang::ReconfigurationDecl::Mode m) {
    switch (m) {
        case lang::ReconfigurationDecl::Mode::Static: return Reconfig::Static;
        case lang::ReconfigurationDecl::Mode::Controllable: return Reconfig::Controllable;
        case lang::ReconfigurationDecl::Mode::Uncontrollable: return Reconfig::Uncontrollable;
    }
    return Reconfig::Static;
}

}  // namespace

FeatureModelSpec from_decl(const lang::FeatureModelDecl& decl) {
    FeatureModelSpec out;
    out.span = decl.span;
    for (const auto& fd : decl.features) {
        Feature f{fd.name, {}, fd.span};
        for (const auto& a : fd.attributes) f.attributes.push_back({a.name, a.type, a.value, a.absent});
        out.model.features.push_back(std::move(f));
    }
    for (const auto& cd : decl.constraints) {
        if (pairwise(cd.kind) && cd.children.size() > 1) {
            for (const auto& child : cd.children) out.model.constraints.push_back({cd.kind, cd.parent, {child}, cd.span});
        } else {
            out.model.constraints.push_back({cd.kind, cd.parent, cd.children, cd.span});
        }
    }
    out.model.attribute_constraints = decl.attribute_constraints;
    for (const auto& r : decl.reconfiguration) {
        if (r.features.empty()) {
            out.mode.default_mode = to_reconfig(r.mode);
        } else {
            for (const auto& f : r.features) out.mode.per_feature[f] = to_reconfig(r.mode);
        }
    }
    for (const auto& s : decl.swaps) out.mode.swaps.push_back({s.event, s.controllable, s.features, s.span});
    out.strictness.strict = decl.strict;
    out.strictness.relaxed_invariants = decl.relaxed_invariants;
    return out;
}

void validate(const FeatureModel& fm) {
    std::set<std::string> names;
    for (const auto& f : fm.features) {
        if (!names.insert(f.name).second) throw ResolveError(f.span, "duplicate feature '" + f.name + "'");
        std::set<std::string> attrs;
        for (const auto& a : f.attributes) {
            if (!attrs.insert(a.name).second)
                throw ResolveError(f.span, "duplicate attribute '" + a.name + "' of feature '" + f.name + "'");
            if (a.type.kind == lang::TypeRef::Kind::Named && !a.absent)
                throw ResolveError(f.span, "attribute '" + a.name + "' of feature '" + f.name +
                                               "' needs an absent value ('else ...')");
        }
    }
    if (fm.features.empty()) throw ResolveError({}, "feature model has no features");

    auto known = [&](const std::string& n, const SourceSpan& span) {
        if (!names.count(n)) throw ResolveError(span, "unknown feature '" + n + "'");
    };
    int roots = 0;
    std::map<std::string, std::string> parent_of;
    for (const auto& c : fm.constraints) {
        known(c.parent, c.span);
        for (const auto& ch : c.children) known(ch, c.span);
        switch (c.kind) {
            case ConstraintKind::Root:
                ++roots;
                if (!c.children.empty()) throw ResolveError(c.span, "root constraint takes one feature");
                break;
            case ConstraintKind::Alternative:
            case ConstraintKind::Or:
                if (c.children.empty())
                    throw ResolveError(c.span, kind_name(c.kind) + " constraint needs at least one child");
                break;
            default:
                if (c.children.size() != 1)
                    throw ResolveError(c.span, kind_name(c.kind) + " constraint relates exactly two features");
        }
        if (decomposition(c.kind)) {
            for (const auto& ch : c.children) {
                if (ch == c.parent) throw ResolveError(c.span, "feature '" + ch + "' cannot be its own child");
                if (!parent_of.emplace(ch, c.parent).second)
                    throw ResolveError(c.span, "feature '" + ch + "' has more than one parent");
            }
        }
    }
    if (roots != 1)
        throw ResolveError({}, "feature model needs exactly one root constraint, found " + std::to_string(roots));
    const std::string root = fm.root();
    if (parent_of.count(root)) throw ResolveError({}, "root feature '" + root + "' has a parent");
    for (const auto& f : fm.features) {
        std::set<std::string> seen;
        std::string cur = f.name;
        while (cur != root) {
            if (!seen.insert(cur).second) throw ResolveError(f.span, "cyclic decomposition at feature '" + cur + "'");
            auto it = parent_of.find(cur);
            if (it == parent_of.end())
                throw ResolveError(f.span, "feature '" + f.name + "' is not connected to the root");
            cur = it->second;
        }
    }
}

void validate(const FeatureModel& fm, const ReconfigMode& mode) {
    validate(fm);
    for (const auto& [name, m] : mode.per_feature)
        if (fm.find(name) < 0) throw ResolveError({}, "reconfiguration of unknown feature '" + name + "'");
    std::map<std::string, std::set<std::string>> members;
    for (const auto& g : mode.swaps) {
        if (g.features.size() < 2)
            throw ResolveError(g.span, "swap '" + g.event + "' needs at least two features");
        for (const auto& f : g.features) {
            if (fm.find(f) < 0) throw ResolveError(g.span, "swap '" + g.event + "' names unknown feature '" + f + "'");
            if (!members[g.event].insert(f).second)
                throw ResolveError(g.span, "feature '" + f + "' appears twice in swap '" + g.event + "'");
        }
    }
}

AstExprPtr presence(const std::string& feature) { return AstExpr::ref(feature + ".present"); }

AstExprPtr constraint_formula(const Constraint& c) {
    auto iff = [](AstExprPtr a, AstExprPtr b) { return AstExpr::binary(BinaryOp::Iff, a, b); };
    auto implies = [](AstExprPtr a, AstExprPtr b) { return AstExpr::binary(BinaryOp::Implies, a, b); };
    AstExprPtr parent = presence(c.parent);
    switch (c.kind) {
        case ConstraintKind::Root: return iff(parent, AstExpr::boolean(true));
        case ConstraintKind::Mandatory: return iff(parent, presence(c.children.at(0)));
        case ConstraintKind::Optional: return implies(presence(c.children.at(0)), parent);
        case ConstraintKind::Requires: return implies(parent, presence(c.children.at(0)));
        case ConstraintKind::Excludes:
            return AstExpr::unary(UnaryOp::Not, AstExpr::binary(BinaryOp::And, parent, presence(c.children.at(0))));
        case ConstraintKind::Or: {
            std::vector<AstExprPtr> kids;
            for (const auto& ch : c.children) kids.push_back(presence(ch));
            return iff(parent, lang::disjunction(kids));
        }
        case ConstraintKind::Alternative: {
            std::vector<AstExprPtr> parts;
            for (std::size_t i = 0; i < c.children.size(); ++i) {
                std::vector<AstExprPtr> rhs;
                for (std::size_t j = 0; j < c.children.size(); ++j)
                    if (j != i) rhs.push_back(AstExpr::unary(UnaryOp::Not, presence(c.children[j])));
                rhs.push_back(parent);
                parts.push_back(iff(presence(c.children[i]), lang::conjunction(rhs)));
            }
            return lang::conjunction(parts);
        }
    }
    return AstExpr::boolean(true);
}

namespace {

lang::TypeRef bool_type() { return {}; }

lang::DiscDecl present_disc() {
    lang::DiscDecl d;
    d.type = bool_type();
    d.name = "present";
    d.init = lang::DiscDecl::Init::Any;
    return d;
}

AstExprPtr absent_value(const Attribute& a) {
    if (a.absent) return a.absent;
    if (a.type.kind == lang::TypeRef::Kind::Bool) return AstExpr::boolean(false);
    return AstExpr::integer(0);
}

lang::UpdateDecl assign_present(AstExprPtr value) {
    return {lang::Name{{"present"}, {}}, std::move(value)};
}

lang::EdgeDecl edge(const std::string& event, std::vector<AstExprPtr> guards, AstExprPtr value) {
    lang::EdgeDecl e;
    e.events.push_back(lang::Name{{event}, {}});
    e.guards = std::move(guards);
    e.updates.push_back(assign_present(std::move(value)));
    return e;
}

/// Body shared by feature definitions and stand-alone feature automata;
/// `values` gives the attribute value expressions (parameter refs or constants).
lang::AutomatonBody feature_body(const std::vector<Attribute>& attrs, const std::vector<AstExprPtr>& values,
                                 Reconfig mode) {
    lang::AutomatonBody body;
    if (mode != Reconfig::Static) body.events.push_back({mode == Reconfig::Controllable, {"come", "go"}, {}});
    body.discs.push_back(present_disc());
    for (std::size_t i = 0; i < attrs.size(); ++i) {
        lang::AlgDecl alg;
        alg.type = attrs[i].type;
        alg.name = attrs[i].name;
        alg.value = AstExpr::if_then_else(AstExpr::ref("present"), values[i], absent_value(attrs[i]));
        body.algs.push_back(std::move(alg));
    }
    lang::LocationDecl loc;
    loc.initial = true;
    loc.marked = true;
    if (mode != Reconfig::Static) {
        AstExprPtr present = AstExpr::ref("present");
        loc.edges.push_back(edge("come", {AstExpr::unary(UnaryOp::Not, present)}, AstExpr::boolean(true)));
        loc.edges.push_back(edge("go", {present}, AstExpr::boolean(false)));
    }
    body.locations.push_back(std::move(loc));
    return body;
}

std::string signature(const Feature& f) {
    std::string s;
    for (const auto& a : f.attributes) {
        lang::TypeRef t = a.type;
        s += a.name + ":" + lang::to_string(t) + ":" + (a.absent ? lang::to_string(a.absent) : "-") + ";";
    }
    return s;
}

std::string mode_suffix(Reconfig m) {
    switch (m) {
        case Reconfig::Static: return "_STATIC";
        case Reconfig::Controllable: return "_CONTROLLABLE";
        case Reconfig::Uncontrollable: return "_UNCONTROLLABLE";
    }
    return {};
}

/// Replaces `sum(a)` by a reference to `a_sum`, collecting the attribute names.
AstExprPtr replace_aggregates(const AstExprPtr& e, std::vector<std::string>& attrs) {
    if (e->kind == AstExpr::Kind::Call) {
        std::string fn = e->name.str();
        if (fn != "sum") throw ResolveError(e->span, "unsupported aggregate '" + fn + "'");
        if (e->operands.size() != 1 || e->operands[0]->kind != AstExpr::Kind::Ref ||
            e->operands[0]->name.parts.size() != 1)
            throw ResolveError(e->span, "sum takes one attribute name");
        std::string attr = e->operands[0]->name.parts[0];
        if (std::find(attrs.begin(), attrs.end(), attr) == attrs.end()) attrs.push_back(attr);
        lang::Name n{{attr + "_sum"}, e->span};
        return AstExpr::ref(n);
    }
    if (e->operands.empty()) return e;
    auto copy = std::make_shared<AstExpr>(*e);
    for (auto& op : copy->operands) op = replace_aggregates(op, attrs);
    return copy;
}

}  // namespace

lang::AutomatonDecl compile_feature(const Feature& f, Reconfig mode) {
    lang::AutomatonDecl a;
    a.kind = AutomatonKind::Plant;
    a.name = f.name;
    std::vector<AstExprPtr> values;
    for (const auto& attr : f.attributes) values.push_back(attr.value);
    a.body = feature_body(f.attributes, values, mode);
    a.span = f.span;
    return a;
}

void compile_swap(const SwapGroup& group, std::vector<lang::AutomatonDecl>& members) {
    if (group.features.size() < 2) throw ResolveError(group.span, "swap '" + group.event + "' needs at least two features");
    for (const auto& f : group.features) {
        auto it = std::find_if(members.begin(), members.end(), [&](const auto& a) { return a.name == f; });
        if (it == members.end())
            throw ResolveError(group.span, "swap '" + group.event + "' names unknown feature '" + f + "'");
        auto toggled = AstExpr::unary(UnaryOp::Not, AstExpr::ref("present"));
        it->body.locations.at(0).edges.push_back(edge(group.event, {}, toggled));
    }
}

lang::SourceSpec compile_feature_model(const FeatureModel& fm, const ReconfigMode& mode, const Strictness& strictness) {
    validate(fm, mode);
    lang::SourceSpec out;
    auto& decls = out.declarations;

    // swap events, controllable first
    std::set<std::string> swapping;
    for (bool controllable : {true, false}) {
        lang::EventDecl ev;
        ev.controllable = controllable;
        for (const auto& g : mode.swaps) {
            if (g.controllable != controllable) continue;
            if (std::find(ev.names.begin(), ev.names.end(), g.event) == ev.names.end()) ev.names.push_back(g.event);
        }
        if (!ev.names.empty()) decls.emplace_back(std::move(ev));
    }
    for (const auto& g : mode.swaps) swapping.insert(g.features.begin(), g.features.end());

    // definitions, keyed by (mode, attribute signature)
    std::vector<std::string> signatures;
    std::set<Reconfig> modes;
    for (const auto& f : fm.features) {
        if (swapping.count(f.name)) continue;
        modes.insert(mode.mode_of(f.name));
        if (!f.attributes.empty() && std::find(signatures.begin(), signatures.end(), signature(f)) == signatures.end())
            signatures.push_back(signature(f));
    }
    std::map<std::pair<Reconfig, std::string>, std::string> def_names;
    auto def_name = [&](const Feature& f) {
        Reconfig m = mode.mode_of(f.name);
        std::string sig = f.attributes.empty() ? std::string() : signature(f);
        auto key = std::pair{m, sig};
        auto it = def_names.find(key);
        if (it != def_names.end()) return it->second;
        std::string name = "FEATURE";
        if (!sig.empty()) {
            name += "_ATTRIBUTED";
            if (signatures.size() > 1)
                name += std::to_string(std::find(signatures.begin(), signatures.end(), sig) - signatures.begin() + 1);
        }
        if (modes.size() > 1 && m != mode.default_mode) name += mode_suffix(m);
        lang::AutomatonDef def;
        def.kind = AutomatonKind::Plant;
        def.name = name;
        std::vector<AstExprPtr> params;
        for (const auto& a : f.attributes) {
            std::string p = f.attributes.size() == 1 ? "x" : "x_" + a.name;
            def.params.push_back({a.type, p});
            params.push_back(AstExpr::ref(p));
        }
        def.body = feature_body(f.attributes, params, m);
        decls.emplace_back(std::move(def));
        def_names.emplace(key, name);
        return name;
    };
    for (const auto& f : fm.features)
        if (!swapping.count(f.name)) def_name(f);

    std::vector<lang::AutomatonDecl> swap_members;
    for (const auto& f : fm.features)
        if (swapping.count(f.name)) swap_members.push_back(compile_feature(f, mode.mode_of(f.name)));
    for (const auto& g : mode.swaps) compile_swap(g, swap_members);

    for (const auto& f : fm.features) {
        if (swapping.count(f.name)) {
            auto it = std::find_if(swap_members.begin(), swap_members.end(), [&](const auto& a) { return a.name == f.name; });
            decls.emplace_back(std::move(*it));
            continue;
        }
        lang::AutomatonInstance inst;
        inst.name = f.name;
        inst.definition = def_name(f);
        for (const auto& a : f.attributes) inst.args.push_back(a.value);
        inst.span = f.span;
        decls.emplace_back(std::move(inst));
    }

    auto alg = [&](lang::TypeRef::Kind kind, const std::string& name, AstExprPtr value) {
        lang::AlgDecl d;
        d.type.kind = kind;
        d.name = name;
        d.value = std::move(value);
        decls.emplace_back(std::move(d));
    };
    std::vector<AstExprPtr> rs;
    for (std::size_t i = 0; i < fm.constraints.size(); ++i) {
        std::string name = "r" + std::to_string(i + 1);
        alg(lang::TypeRef::Kind::Bool, name, constraint_formula(fm.constraints[i]));
        rs.push_back(AstExpr::ref(name));
    }
    alg(lang::TypeRef::Kind::Bool, "sys_valid", lang::conjunction(rs));

    // attribute constraints
    std::vector<std::vector<std::string>> used(fm.attribute_constraints.size());
    std::vector<AstExprPtr> rewritten;
    std::vector<std::string> all_attrs;
    for (std::size_t k = 0; k < fm.attribute_constraints.size(); ++k) {
        rewritten.push_back(replace_aggregates(fm.attribute_constraints[k], used[k]));
        for (const auto& a : used[k])
            if (std::find(all_attrs.begin(), all_attrs.end(), a) == all_attrs.end()) all_attrs.push_back(a);
    }
    for (const auto& attr : all_attrs) {
        std::vector<AstExprPtr> terms;
        lang::TypeRef::Kind kind = lang::TypeRef::Kind::Int;
        for (const auto& f : fm.features) {
            if (const Attribute* a = f.attribute(attr)) {
                if (a->type.kind != lang::TypeRef::Kind::Int)
                    throw ResolveError(f.span, "sum over non-integer attribute '" + attr + "'");
                terms.push_back(AstExpr::ref(f.name + "." + attr));
            }
        }
        if (terms.empty()) throw ResolveError({}, "no feature has attribute '" + attr + "'");
        AstExprPtr sum = terms[0];
        for (std::size_t i = 1; i < terms.size(); ++i) sum = AstExpr::binary(BinaryOp::Add, sum, terms[i]);
        alg(kind, attr + "_sum", sum);
    }
    std::vector<AstExprPtr> validity{AstExpr::ref("sys_valid")};
    std::set<std::string> valid_names;
    for (std::size_t k = 0; k < rewritten.size(); ++k) {
        std::string name;
        if (used[k].size() == 1 && !valid_names.count(used[k][0] + "_valid")) name = used[k][0] + "_valid";
        else name = "attr_valid" + std::to_string(k + 1);
        valid_names.insert(name);
        alg(lang::TypeRef::Kind::Bool, name, rewritten[k]);
        validity.push_back(AstExpr::ref(name));
    }

    lang::AutomatonDecl validity_aut;
    validity_aut.kind = AutomatonKind::Plant;
    validity_aut.name = "Validity";
    lang::LocationDecl loc;
    loc.initial = true;
    loc.initial_predicate = lang::conjunction(validity);
    loc.marked = true;
    validity_aut.body.locations.push_back(std::move(loc));
    decls.emplace_back(std::move(validity_aut));

    if (strictness.strict) {
        if (!mode.is_static()) decls.emplace_back(lang::InvariantDecl{AutomatonKind::Plant, lang::conjunction(validity), {}});
    } else {
        for (const auto& inv : strictness.relaxed_invariants)
            decls.emplace_back(lang::InvariantDecl{AutomatonKind::Plant, inv, inv->span});
    }
    return out;
}

bool has_feature_model(const lang::SourceSpec& spec) {
    for (const auto& d : spec.declarations)
        if (std::holds_alternative<lang::FeatureModelDecl>(d)) return true;
    return false;
}

std::optional<FeatureModelSpec> find_feature_model(const lang::SourceSpec& spec) {
    std::optional<FeatureModelSpec> out;
    for (const auto& d : spec.declarations) {
        if (const auto* fm = std::get_if<lang::FeatureModelDecl>(&d)) {
            if (out) throw ResolveError(fm->span, "only one featuremodel block is allowed");
            out = from_decl(*fm);
        }
    }
    return out;
}

lang::SourceSpec lower(const lang::SourceSpec& spec) {
    lang::SourceSpec out;
    bool seen = false;
    for (const auto& d : spec.declarations) {
        const auto* fm = std::get_if<lang::FeatureModelDecl>(&d);
        if (!fm) {
            out.declarations.push_back(d);
            continue;
        }
        if (seen) throw ResolveError(fm->span, "only one featuremodel block is allowed");
        seen = true;
        FeatureModelSpec parts = from_decl(*fm);
        out.append(compile_feature_model(parts.model, parts.mode, parts.strictness));
    }
    return out;
}

// ---- direct evaluation ----

namespace {

/// Evaluates attribute expressions for one configuration; booleans are 0/1.
class AttributeEval {
public:
    AttributeEval(const FeatureModel& fm, Configuration c) : fm_(fm), c_(c) {}

    std::int64_t operator()(const AstExprPtr& e) const {
        switch (e->kind) {
            case AstExpr::Kind::BoolLit: return e->bool_value ? 1 : 0;
            case AstExpr::Kind::IntLit: return e->int_value;
            case AstExpr::Kind::Ref: return ref(*e);
            case AstExpr::Kind::Unary: {
                std::int64_t v = (*this)(e->operands[0]);
                return e->unary_op == UnaryOp::Not ? !v : -v;
            }
            case AstExpr::Kind::If:
                return (*this)(e->operands[0]) ? (*this)(e->operands[1]) : (*this)(e->operands[2]);
            case AstExpr::Kind::Call: {
                if (e->name.str() != "sum") throw ResolveError(e->span, "unsupported aggregate '" + e->name.str() + "'");
                const std::string& attr = e->operands.at(0)->name.parts.at(0);
                std::int64_t total = 0;
                for (std::size_t i = 0; i < fm_.features.size(); ++i)
                    if (const Attribute* a = fm_.features[i].attribute(attr)) total += value(i, *a);
                return total;
            }
            case AstExpr::Kind::Binary: break;
        }
        std::int64_t a = (*this)(e->operands[0]);
        std::int64_t b = (*this)(e->operands[1]);
        switch (e->binary_op) {
            case BinaryOp::Iff: return (a != 0) == (b != 0);
            case BinaryOp::Implies: return !a || b;
            case BinaryOp::Or: return a || b;
            case BinaryOp::And: return a && b;
            case BinaryOp::Equal: return a == b;
            case BinaryOp::NotEqual: return a != b;
            case BinaryOp::Less: return a < b;
            case BinaryOp::LessEq: return a <= b;
            case BinaryOp::Greater: return a > b;
            case BinaryOp::GreaterEq: return a >= b;
            case BinaryOp::Add: return a + b;
            case BinaryOp::Sub: return a - b;
            case BinaryOp::Mul: return a * b;
        }
        return 0;
    }

private:
    std::int64_t value(std::size_t feature, const Attribute& a) const {
        if (c_ >> feature & 1) return (*this)(a.value);
        return a.absent ? (*this)(a.absent) : 0;
    }

    std::int64_t ref(const AstExpr& e) const {
        const auto& parts = e.name.parts;
        if (parts.size() == 2) {
            int f = fm_.find(parts[0]);
            if (f >= 0) {
                if (parts[1] == "present") return c_ >> f & 1;
                if (const Attribute* a = fm_.features[f].attribute(parts[1])) return value(f, *a);
            }
        }
        throw ResolveError(e.span, "cannot evaluate '" + e.name.str() + "' in an attribute constraint");
    }

    const FeatureModel& fm_;
    Configuration c_;
};

}  // namespace

bool is_valid_configuration(const FeatureModel& fm, Configuration c, bool with_attributes) {
    auto on = [&](const std::string& f) { return (c >> fm.find(f) & 1) != 0; };
    for (const auto& k : fm.constraints) {
        bool p = on(k.parent);
        bool ok = true;
        switch (k.kind) {
            case ConstraintKind::Root: ok = p; break;
            case ConstraintKind::Mandatory: ok = p == on(k.children[0]); break;
            case ConstraintKind::Optional: ok = !on(k.children[0]) || p; break;
            case ConstraintKind::Requires: ok = !p || on(k.children[0]); break;
            case ConstraintKind::Excludes: ok = !(p && on(k.children[0])); break;
            case ConstraintKind::Or: {
                int n = 0;
                for (const auto& ch : k.children) n += on(ch);
                ok = p == (n > 0);
                break;
            }
            case ConstraintKind::Alternative: {
                int n = 0;
                for (const auto& ch : k.children) n += on(ch);
                ok = p ? n == 1 : n == 0;
                break;
            }
        }
        if (!ok) return false;
    }
    if (with_attributes) {
        AttributeEval eval(fm, c);
        for (const auto& e : fm.attribute_constraints)
            if (!eval(e)) return false;
    }
    return true;
}

std::uint64_t enumerate_valid_configurations(const FeatureModel& fm, bool with_attributes) {
    std::size_t n = fm.features.size();
    if (n > 30) throw Error("too many features to enumerate (" + std::to_string(n) + ")");
    std::uint64_t count = 0;
    for (Configuration c = 0; c < (Configuration{1} << n); ++c)
        if (is_valid_configuration(fm, c, with_attributes)) ++count;
    return count;
}

}  // namespace fsc::feature
