#include "fsc/lang/printer.hpp"

#include <sstream>

namespace fsc::lang {

namespace {

bool left_associative(BinaryOp op) {
    switch (op) {
        case BinaryOp::Iff:
        case BinaryOp::Or:
        case BinaryOp::And:
        case BinaryOp::Add:
        case BinaryOp::Sub:
        case BinaryOp::Mul: return true;
        default: return false;
    }
}

void write(std::ostream& out, const AstExpr& e);

void write_operand(std::ostream& out, const AstExpr& child, BinaryOp parent, bool left) {
    bool bare = true;
    if (child.kind == AstExpr::Kind::Binary) {
        if (child.binary_op != parent) bare = false;
        else if (left) bare = left_associative(parent);
        else bare = parent == BinaryOp::Implies;
    }
    if (!bare) out << '(';
    write(out, child);
    if (!bare) out << ')';
}

void write(std::ostream& out, const AstExpr& e) {
    switch (e.kind) {
        case AstExpr::Kind::BoolLit: out << (e.bool_value ? "true" : "false"); return;
        case AstExpr::Kind::IntLit: out << e.int_value; return;
        case AstExpr::Kind::Ref: out << e.name.str(); return;
        case AstExpr::Kind::Unary: {
            const AstExpr& operand = *e.operands[0];
            if (e.unary_op == UnaryOp::Not) {
                out << "not(";
                write(out, operand);
                out << ')';
                return;
            }
            bool atom = operand.kind == AstExpr::Kind::IntLit || operand.kind == AstExpr::Kind::Ref ||
                        operand.kind == AstExpr::Kind::BoolLit;
            out << '-';
            if (!atom) out << '(';
            write(out, operand);
            if (!atom) out << ')';
            return;
        }
        case AstExpr::Kind::Binary:
            write_operand(out, *e.operands[0], e.binary_op, true);
            out << ' ' << spelling(e.binary_op) << ' ';
            write_operand(out, *e.operands[1], e.binary_op, false);
            return;
        case AstExpr::Kind::If:
            out << "if ";
            write(out, *e.operands[0]);
            out << " : ";
            write(out, *e.operands[1]);
            out << " else ";
            write(out, *e.operands[2]);
            out << " end";
            return;
        case AstExpr::Kind::Call:
            out << e.name.str() << '(';
            for (std::size_t i = 0; i < e.operands.size(); ++i) {
                if (i) out << ", ";
                write(out, *e.operands[i]);
            }
            out << ')';
            return;
    }
}

template <typename T, typename F>
std::string join(const std::vector<T>& items, F&& show, std::string_view sep = ", ") {
    std::string out;
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (i) out += sep;
        out += show(items[i]);
    }
    return out;
}

std::string plain(const std::string& s) { return s; }
std::string dotted(const Name& n) { return n.str(); }
std::string expr(const AstExprPtr& e) { return to_string(e); }

void write_events(std::ostream& out, const EventDecl& d, std::string_view indent) {
    out << indent << (d.controllable ? "controllable " : "uncontrollable ") << join(d.names, plain) << ";\n";
}

void write_body(std::ostream& out, const AutomatonBody& b) {
    for (const auto& ev : b.events) write_events(out, ev, "  ");
    if (b.alphabet) out << "  alphabet " << join(*b.alphabet, dotted) << ";\n";
    if (b.monitor) {
        out << "  monitor";
        if (!b.monitored.empty()) out << ' ' << join(b.monitored, dotted);
        out << ";\n";
    }
    for (const auto& d : b.discs) {
        out << "  disc " << to_string(d.type) << ' ' << d.name;
        if (d.init == DiscDecl::Init::Value) out << " = " << to_string(d.value);
        if (d.init == DiscDecl::Init::Any) out << " in any";
        out << ";\n";
    }
    for (const auto& a : b.algs)
        out << "  alg " << to_string(a.type) << ' ' << a.name << " = " << to_string(a.value) << ";\n";
    for (const auto& loc : b.locations) {
        out << "  location";
        if (loc.name) out << ' ' << *loc.name;
        if (!loc.initial && !loc.marked && loc.edges.empty()) {
            out << ";\n";
            continue;
        }
        out << ":";
        if (loc.initial) {
            out << " initial";
            if (loc.initial_predicate) out << ' ' << to_string(loc.initial_predicate);
            out << ';';
        }
        if (loc.marked) {
            out << " marked";
            if (loc.marked_predicate) out << ' ' << to_string(loc.marked_predicate);
            out << ';';
        }
        out << '\n';
        for (const auto& e : loc.edges) {
            out << "    edge " << join(e.events, dotted);
            if (!e.guards.empty()) out << " when " << join(e.guards, expr);
            if (!e.updates.empty())
                out << " do " << join(e.updates, [](const UpdateDecl& u) {
                    return u.target.str() + " := " + to_string(u.value);
                });
            if (e.target) out << " goto " << *e.target;
            out << ";\n";
        }
    }
}

std::string_view constraint_word(ConstraintDecl::Kind k) {
    switch (k) {
        case ConstraintDecl::Kind::Root: return "root";
        case ConstraintDecl::Kind::Mandatory: return "mandatory";
        case ConstraintDecl::Kind::Optional: return "optional";
        case ConstraintDecl::Kind::Alternative: return "alternative";
        case ConstraintDecl::Kind::Or: return "or";
        case ConstraintDecl::Kind::Requires: return "requires";
        case ConstraintDecl::Kind::Excludes: return "excludes";
    }
    return "?";
}

void write_feature_model(std::ostream& out, const FeatureModelDecl& fm) {
    out << "featuremodel:\n";
    for (const auto& f : fm.features) {
        out << "  feature " << f.name;
        if (!f.attributes.empty()) {
            out << '(' << join(f.attributes, [](const AttributeDecl& a) {
                std::string s = to_string(a.type) + ' ' + a.name + " = " + to_string(a.value);
                if (a.absent) s += " else " + to_string(a.absent);
                return s;
            }) << ')';
        }
        out << ";\n";
    }
    for (const auto& c : fm.constraints) {
        out << "  " << constraint_word(c.kind) << ' ' << c.parent;
        if (c.kind != ConstraintDecl::Kind::Root) out << ": " << join(c.children, plain);
        out << ";\n";
    }
    for (const auto& e : fm.attribute_constraints) out << "  constraint " << to_string(e) << ";\n";
    for (const auto& r : fm.reconfiguration) {
        out << "  reconfiguration "
            << (r.mode == ReconfigurationDecl::Mode::Static         ? "static"
                : r.mode == ReconfigurationDecl::Mode::Controllable ? "controllable"
                                                                    : "uncontrollable");
        if (!r.features.empty()) out << ": " << join(r.features, plain);
        out << ";\n";
    }
    for (const auto& s : fm.swaps)
        out << "  swap " << (s.controllable ? "controllable " : "") << s.event << ": " << join(s.features, plain)
            << ";\n";
    if (fm.strict) {
        out << "  strict;\n";
    } else {
        out << "  relaxed";
        if (!fm.relaxed_invariants.empty()) out << ": " << join(fm.relaxed_invariants, expr);
        out << ";\n";
    }
    out << "end\n";
}

struct DeclPrinter {
    std::ostream& out;

    void operator()(const EnumDecl& d) { out << "enum " << d.name << " = " << join(d.literals, plain) << ";\n"; }
    void operator()(const EventDecl& d) { write_events(out, d, ""); }
    void operator()(const AlgDecl& d) {
        out << "alg " << to_string(d.type) << ' ' << d.name << " = " << to_string(d.value) << ";\n";
    }
    void operator()(const AutomatonDef& d) {
        out << spelling(d.kind) << " def " << d.name << '('
            << join(d.params, [](const ParamDecl& p) { return "alg " + to_string(p.type) + ' ' + p.name; })
            << "):\n";
        write_body(out, d.body);
        out << "end\n";
    }
    void operator()(const AutomatonInstance& d) {
        out << d.name << ": " << d.definition << '(' << join(d.args, expr) << ");\n";
    }
    void operator()(const AutomatonDecl& d) {
        out << spelling(d.kind) << " automaton " << d.name << ":\n";
        write_body(out, d.body);
        out << "end\n";
    }
    void operator()(const InvariantDecl& d) {
        out << spelling(d.kind) << " invariant " << to_string(d.predicate) << ";\n";
    }
    void operator()(const EventConditionDecl& d) {
        out << "requirement " << d.event.str() << " needs " << to_string(d.condition) << ";\n";
    }
    void operator()(const FeatureModelDecl& d) { write_feature_model(out, d); }
};

}  // namespace

std::string to_string(const AstExpr& e) {
    std::ostringstream out;
    write(out, e);
    return out.str();
}

std::string to_string(const AstExprPtr& e) { return e ? to_string(*e) : std::string("true"); }

std::string to_string(const TypeRef& t) {
    switch (t.kind) {
        case TypeRef::Kind::Bool: return "bool";
        case TypeRef::Kind::Int:
            if (!t.has_range) return "int";
            return "int[" + std::to_string(t.lo) + ".." + std::to_string(t.hi) + "]";
        case TypeRef::Kind::Named: return t.name;
    }
    return "?";
}

std::string print(const Declaration& decl) {
    std::ostringstream out;
    std::visit(DeclPrinter{out}, decl);
    return out.str();
}

std::string print(const SourceSpec& spec) {
    std::ostringstream out;
    for (std::size_t i = 0; i < spec.declarations.size(); ++i) {
        const auto& d = spec.declarations[i];
        bool block = std::holds_alternative<AutomatonDef>(d) || std::holds_alternative<AutomatonDecl>(d) ||
                     std::holds_alternative<FeatureModelDecl>(d);
        if (i && block) out << '\n';
        out << print(d);
        if (block && i + 1 < spec.declarations.size()) out << '\n';
    }
    return out.str();
}

}  // namespace fsc::lang
