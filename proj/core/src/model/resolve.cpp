#include "fsc/model/resolve.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "fsc/lang/printer.hpp"

namespace fsc {

namespace {

using lang::AstExpr;
using lang::AstExprPtr;
using lang::Name;
using lang::TypeRef;

// One automaton in the flattened output, either declared directly or instantiated from a definition.
struct Unit {
    std::string name;
    AutomatonKind kind = AutomatonKind::Plant;
    const lang::AutomatonBody* body = nullptr;
    const lang::AutomatonDef* def = nullptr;
    const lang::AutomatonInstance* instance = nullptr;
    SourceSpan span;

    std::unordered_map<std::string, ExprPtr> params;
    std::unordered_map<std::string, int> events;
    std::unordered_map<std::string, int> discs;
    std::unordered_map<std::string, int> algs;
    std::unordered_map<std::string, int> locations;
    std::unordered_set<std::string> names;  // local namespace
};

struct AlgSlot {
    enum class State { Pending, Busy, Done };
    State state = State::Pending;
    const lang::AlgDecl* decl = nullptr;
    int unit = -1;
};

class Resolver {
public:
    Resolver(const lang::SourceSpec& spec, const ResolveOptions& options) : spec_(spec), opt_(options) {}

    Model run() {
        collect();
        if (units_.empty() && m_.events.empty() && m_.algs.empty() && spec_.declarations.empty())
            throw ResolveError({}, "no declarations");
        build_units();
        register_locals();
        bind_parameters();
        for (std::size_t i = 0; i < slots_.size(); ++i) ensure_alg(static_cast<int>(i));
        initialize_discs();
        for (std::size_t u = 0; u < units_.size(); ++u) build_automaton(static_cast<int>(u));
        build_requirements();
        return std::move(m_);
    }

private:
    // --- collection ----------------------------------------------------------

    void claim_global(const std::string& name, const SourceSpan& span) {
        if (!globals_.insert(name).second) throw ResolveError(span, "duplicate declaration of '" + name + "'");
    }

    void collect() {
        for (const auto& decl : spec_.declarations) {
            std::visit([&](const auto& d) { collect_one(d); }, decl);
        }
    }

    void collect_one(const lang::EnumDecl& d) {
        claim_global(d.name, d.span);
        int index = static_cast<int>(m_.enums.size());
        std::set<std::string> seen;
        for (const auto& lit : d.literals) {
            if (!seen.insert(lit).second) throw ResolveError(d.span, "duplicate literal '" + lit + "'");
            if (literals_.count(lit))
                throw ResolveError(d.span, "literal '" + lit + "' declared in more than one enumeration");
            literals_[lit] = {index, static_cast<int>(&lit - d.literals.data())};
        }
        enum_index_[d.name] = index;
        m_.enums.push_back({d.name, d.literals});
    }

    void collect_one(const lang::EventDecl& d) {
        for (const auto& n : d.names) {
            claim_global(n, d.span);
            global_events_[n] = static_cast<int>(m_.events.size());
            m_.events.push_back({n, d.controllable});
        }
    }

    void collect_one(const lang::AlgDecl& d) {
        claim_global(d.name, d.span);
        global_algs_[d.name] = add_alg_slot(d.name, &d, -1);
    }

    void collect_one(const lang::AutomatonDef& d) {
        claim_global(d.name, d.span);
        defs_[d.name] = &d;
    }

    void collect_one(const lang::AutomatonInstance& d) {
        claim_global(d.name, d.span);
        Unit u;
        u.name = d.name;
        u.instance = &d;
        u.span = d.span;
        units_.push_back(std::move(u));
    }

    void collect_one(const lang::AutomatonDecl& d) {
        claim_global(d.name, d.span);
        Unit u;
        u.name = d.name;
        u.kind = d.kind;
        u.body = &d.body;
        u.span = d.span;
        units_.push_back(std::move(u));
    }

    void collect_one(const lang::InvariantDecl& d) { invariants_.push_back(&d); }
    void collect_one(const lang::EventConditionDecl& d) { conditions_.push_back(&d); }

    void collect_one(const lang::FeatureModelDecl& d) {
        throw ResolveError(d.span, "featuremodel block must be lowered before resolution");
    }

    int add_alg_slot(const std::string& name, const lang::AlgDecl* decl, int unit) {
        AlgVar a;
        a.name = name;
        m_.algs.push_back(std::move(a));
        AlgSlot s;
        s.decl = decl;
        s.unit = unit;
        slots_.push_back(s);
        return static_cast<int>(m_.algs.size()) - 1;
    }

    // --- automata ------------------------------------------------------------

    void build_units() {
        for (std::size_t i = 0; i < units_.size(); ++i) {
            Unit& u = units_[i];
            if (u.instance) {
                auto it = defs_.find(u.instance->definition);
                if (it == defs_.end())
                    throw ResolveError(u.span, "unknown automaton definition '" + u.instance->definition + "'");
                u.def = it->second;
                u.kind = u.def->kind;
                u.body = &u.def->body;
                if (u.instance->args.size() != u.def->params.size())
                    throw ResolveError(u.span, "definition '" + u.def->name + "' expects " +
                                                   std::to_string(u.def->params.size()) + " argument(s), got " +
                                                   std::to_string(u.instance->args.size()));
            }
            unit_index_[u.name] = static_cast<int>(i);
            Automaton a;
            a.name = u.name;
            a.kind = u.kind;
            a.span = u.span;
            m_.automata.push_back(std::move(a));
        }
    }

    void claim_local(Unit& u, const std::string& name, const SourceSpan& span) {
        if (!u.names.insert(name).second)
            throw ResolveError(span, "duplicate name '" + name + "' in automaton '" + u.name + "'");
    }

    void register_locals() {
        for (std::size_t ui = 0; ui < units_.size(); ++ui) {
            Unit& u = units_[ui];
            const auto& body = *u.body;
            if (u.def)
                for (const auto& p : u.def->params) claim_local(u, p.name, u.span);
            for (const auto& ev : body.events) {
                for (const auto& n : ev.names) {
                    claim_local(u, n, ev.span);
                    u.events[n] = static_cast<int>(m_.events.size());
                    m_.events.push_back({u.name + "." + n, ev.controllable});
                }
            }
            for (const auto& d : body.discs) {
                claim_local(u, d.name, d.span);
                DiscVar v;
                v.name = u.name + "." + d.name;
                v.automaton = static_cast<int>(ui);
                v.type = disc_type(d, v.name);
                u.discs[d.name] = static_cast<int>(m_.discs.size());
                m_.automata[ui].discs.push_back(static_cast<int>(m_.discs.size()));
                m_.discs.push_back(std::move(v));
            }
            for (const auto& a : body.algs) {
                claim_local(u, a.name, a.span);
                u.algs[a.name] = add_alg_slot(u.name + "." + a.name, &a, static_cast<int>(ui));
            }
            if (body.locations.empty())
                throw ResolveError(u.span, "automaton '" + u.name + "' has no locations");
            int anonymous = 0;
            for (std::size_t li = 0; li < body.locations.size(); ++li) {
                const auto& loc = body.locations[li];
                if (!loc.name) {
                    if (++anonymous > 1 || body.locations.size() > 1)
                        throw ResolveError(loc.span, "a nameless location must be the only location of '" +
                                                         u.name + "'");
                    continue;
                }
                if (u.locations.count(*loc.name))
                    throw ResolveError(loc.span, "duplicate location '" + *loc.name + "' in '" + u.name + "'");
                claim_local(u, *loc.name, loc.span);
                u.locations[*loc.name] = static_cast<int>(li);
            }
        }
    }

    Type disc_type(const lang::DiscDecl& d, const std::string& qualified) {
        if (d.type.kind == TypeRef::Kind::Int && !d.type.has_range) {
            m_.warnings.push_back({Severity::Warning, d.span,
                                   "variable '" + qualified + "' declared as bare int; using range " +
                                       std::to_string(opt_.default_int_lo) + ".." +
                                       std::to_string(opt_.default_int_hi)});
            return Type::integer(opt_.default_int_lo, opt_.default_int_hi);
        }
        Type t = named_type(d.type);
        if (t.is_int() && (t.lo < INT32_MIN || t.hi > INT32_MAX))
            throw ResolveError(d.type.span, "integer range of '" + qualified + "' exceeds 32 bits");
        return t;
    }

    /// Declared type; bare int becomes an unbounded marker range.
    Type named_type(const TypeRef& t) {
        switch (t.kind) {
            case TypeRef::Kind::Bool: return Type::boolean();
            case TypeRef::Kind::Int:
                if (!t.has_range) return Type::integer(INT64_MIN / 4, INT64_MAX / 4);
                return Type::integer(t.lo, t.hi);
            case TypeRef::Kind::Named: {
                auto it = enum_index_.find(t.name);
                if (it == enum_index_.end()) throw ResolveError(t.span, "unknown type '" + t.name + "'");
                return Type::enum_type(it->second, static_cast<int>(m_.enums[it->second].literals.size()));
            }
        }
        return Type::boolean();
    }

    void bind_parameters() {
        for (auto& u : units_) {
            if (!u.def) continue;
            for (std::size_t i = 0; i < u.def->params.size(); ++i) {
                const auto& p = u.def->params[i];
                ExprPtr arg = expr(u.instance->args[i], -1);
                Type want = named_type(p.type);
                if (!arg->type.compatible(want))
                    throw ResolveError(u.instance->args[i]->span, "argument for parameter '" + p.name + "' of '" +
                                                                      u.def->name + "' must be of type " +
                                                                      lang::to_string(p.type));
                u.params[p.name] = arg;
            }
        }
    }

    void ensure_alg(int index) {
        AlgSlot& s = slots_[index];
        if (s.state == AlgSlot::State::Done) return;
        if (s.state == AlgSlot::State::Busy)
            throw ResolveError(s.decl->span, "cyclic definition of algebraic variable '" + m_.algs[index].name + "'");
        s.state = AlgSlot::State::Busy;
        ExprPtr def = expr(s.decl->value, s.unit);
        Type declared = named_type(s.decl->type);
        if (!def->type.compatible(declared))
            throw ResolveError(s.decl->span, "definition of '" + m_.algs[index].name + "' does not match its type " +
                                                 lang::to_string(s.decl->type));
        AlgVar& a = m_.algs[index];
        a.definition = def;
        a.type = def->type;
        if (declared.is_int() && s.decl->type.has_range) a.type = declared;
        slots_[index].state = AlgSlot::State::Done;
    }

    void initialize_discs() {
        for (std::size_t ui = 0; ui < units_.size(); ++ui) {
            const Unit& u = units_[ui];
            for (const auto& d : u.body->discs) {
                DiscVar& v = m_.discs[u.discs.at(d.name)];
                switch (d.init) {
                    case lang::DiscDecl::Init::Any: v.any_initial = true; break;
                    case lang::DiscDecl::Init::Default: v.initial = v.type.contains(0) ? 0 : v.type.lo; break;
                    case lang::DiscDecl::Init::Value: {
                        ExprPtr e = expr(d.value, static_cast<int>(ui));
                        if (!e->type.compatible(v.type))
                            throw ResolveError(d.value->span, "initial value of '" + v.name + "' has the wrong type");
                        auto c = constant_value(m_, e);
                        if (!c) throw ResolveError(d.value->span, "initial value of '" + v.name + "' must be constant");
                        if (!v.type.contains(*c))
                            throw ResolveError(d.value->span, "initial value " + std::to_string(*c) + " of '" +
                                                                  v.name + "' outside " + type_name(m_, v.type));
                        v.initial = *c;
                        break;
                    }
                }
            }
        }
    }

    int edge_event(const Name& n, int unit) {
        if (n.parts.size() == 1) {
            if (unit >= 0) {
                auto it = units_[unit].events.find(n.parts[0]);
                if (it != units_[unit].events.end()) return it->second;
            }
            auto g = global_events_.find(n.parts[0]);
            if (g != global_events_.end()) return g->second;
        } else if (n.parts.size() == 2) {
            auto u = unit_index_.find(n.parts[0]);
            if (u != unit_index_.end()) {
                auto it = units_[u->second].events.find(n.parts[1]);
                if (it != units_[u->second].events.end()) return it->second;
            }
        }
        throw ResolveError(n.span, "unknown event '" + n.str() + "'");
    }

    int update_target(const Name& n, int unit) {
        const Unit& u = units_[unit];
        std::string local;
        if (n.parts.size() == 1) local = n.parts[0];
        else if (n.parts.size() == 2 && n.parts[0] == u.name) local = n.parts[1];
        auto it = u.discs.find(local);
        if (it != u.discs.end()) return it->second;
        if (n.parts.size() == 2 && unit_index_.count(n.parts[0]))
            throw ResolveError(n.span, "automaton '" + u.name + "' cannot assign '" + n.str() +
                                           "': variables are written only by their own automaton");
        throw ResolveError(n.span, "unknown discrete variable '" + n.str() + "' in '" + u.name + "'");
    }

    void build_automaton(int ui) {
        const Unit& u = units_[ui];
        Automaton& a = m_.automata[ui];
        const auto& body = *u.body;
        std::set<int> used;
        for (std::size_t li = 0; li < body.locations.size(); ++li) {
            const auto& decl = body.locations[li];
            Location loc;
            loc.name = decl.name.value_or("");
            loc.initial = decl.initial;
            loc.initial_predicate = decl.initial ? predicate(decl.initial_predicate, ui) : Expr::constant(false);
            loc.marked = decl.marked;
            loc.marked_predicate = decl.marked ? predicate(decl.marked_predicate, ui) : Expr::constant(false);
            a.locations.push_back(std::move(loc));
        }
        for (std::size_t li = 0; li < body.locations.size(); ++li) {
            for (const auto& e : body.locations[li].edges) {
                std::vector<ExprPtr> guards;
                for (const auto& g : e.guards) guards.push_back(boolean(g, ui, "guard"));
                ExprPtr guard = conjunction(guards);
                std::vector<Update> updates;
                std::set<int> written;
                for (const auto& up : e.updates) {
                    int var = update_target(up.target, ui);
                    if (!written.insert(var).second)
                        throw ResolveError(up.target.span, "variable '" + m_.discs[var].name + "' assigned twice");
                    ExprPtr value = expr(up.value, ui);
                    if (!value->type.compatible(m_.discs[var].type))
                        throw ResolveError(up.value->span, "value assigned to '" + m_.discs[var].name +
                                                               "' must be of type " +
                                                               type_name(m_, m_.discs[var].type));
                    updates.push_back({var, value});
                }
                int target = static_cast<int>(li);
                if (e.target) {
                    auto it = u.locations.find(*e.target);
                    if (it == u.locations.end())
                        throw ResolveError(e.span, "unknown location '" + *e.target + "' in '" + u.name + "'");
                    target = it->second;
                }
                for (const auto& evname : e.events) {
                    Edge edge;
                    edge.source = static_cast<int>(li);
                    edge.target = target;
                    edge.event = edge_event(evname, ui);
                    edge.guard = guard;
                    edge.updates = updates;
                    edge.span = e.span;
                    used.insert(edge.event);
                    a.edges.push_back(std::move(edge));
                }
            }
        }
        std::set<int> alphabet = used;
        if (body.alphabet) {
            alphabet.clear();
            for (const auto& n : *body.alphabet) alphabet.insert(edge_event(n, ui));
            for (int ev : used)
                if (!alphabet.count(ev))
                    throw ResolveError(u.span, "event '" + m_.events[ev].name + "' used on an edge of '" + u.name +
                                                   "' but missing from its alphabet");
        }
        a.alphabet.assign(alphabet.begin(), alphabet.end());
        if (body.monitor) {
            if (body.monitored.empty()) {
                a.monitored = a.alphabet;
            } else {
                std::set<int> mon;
                for (const auto& n : body.monitored) {
                    int ev = edge_event(n, ui);
                    if (!alphabet.count(ev))
                        throw ResolveError(n.span, "monitored event '" + n.str() + "' is not in the alphabet of '" +
                                                       u.name + "'");
                    mon.insert(ev);
                }
                a.monitored.assign(mon.begin(), mon.end());
            }
        }
        if (a.kind == AutomatonKind::Supervisor) {
            for (int ev : a.alphabet)
                if (!m_.events[ev].controllable)
                    throw ResolveError(u.span, "supervisor '" + u.name + "' may not restrict uncontrollable event '" +
                                                   m_.events[ev].name + "'");
        }
    }

    void build_requirements() {
        for (const auto* d : invariants_) {
            Invariant inv;
            inv.kind = d->kind;
            inv.predicate = boolean(d->predicate, -1, "invariant");
            inv.text = lang::to_string(d->predicate);
            inv.span = d->span;
            m_.invariants.push_back(std::move(inv));
        }
        for (const auto* d : conditions_) {
            EventCondition c;
            c.event = edge_event(d->event, -1);
            c.condition = boolean(d->condition, -1, "event condition");
            c.text = d->event.str() + " needs " + lang::to_string(d->condition);
            c.span = d->span;
            m_.conditions.push_back(std::move(c));
        }
    }

    // --- expressions ---------------------------------------------------------

    ExprPtr predicate(const AstExprPtr& e, int unit) {
        if (!e) return Expr::constant(true);
        return boolean(e, unit, "predicate");
    }

    ExprPtr boolean(const AstExprPtr& e, int unit, const char* what) {
        ExprPtr r = expr(e, unit);
        if (!r->type.is_bool()) throw ResolveError(e->span, std::string(what) + " must be boolean");
        return r;
    }

    ExprPtr alg_ref(int index) {
        ensure_alg(index);
        return Expr::alg(index, m_.algs[index].type);
    }

    ExprPtr lookup_in_unit(int unit, const std::string& name) {
        const Unit& u = units_[unit];
        if (auto it = u.discs.find(name); it != u.discs.end()) return Expr::disc(it->second, m_.discs[it->second].type);
        if (auto it = u.algs.find(name); it != u.algs.end()) return alg_ref(it->second);
        if (auto it = u.locations.find(name); it != u.locations.end()) return Expr::loc(unit, it->second);
        return nullptr;
    }

    ExprPtr reference(const Name& n, int unit) {
        if (n.parts.size() == 1) {
            const std::string& x = n.parts[0];
            if (unit >= 0) {
                const Unit& u = units_[unit];
                if (auto it = u.params.find(x); it != u.params.end()) return it->second;
                if (auto r = lookup_in_unit(unit, x)) return r;
            }
            if (auto it = global_algs_.find(x); it != global_algs_.end()) return alg_ref(it->second);
            if (auto it = literals_.find(x); it != literals_.end()) {
                auto [en, idx] = it->second;
                return Expr::constant(idx, Type::enum_type(en, static_cast<int>(m_.enums[en].literals.size())));
            }
            if (global_events_.count(x) || unit_index_.count(x))
                throw ResolveError(n.span, "'" + x + "' is not a value");
        } else if (n.parts.size() == 2) {
            auto it = unit_index_.find(n.parts[0]);
            if (it != unit_index_.end()) {
                if (auto r = lookup_in_unit(it->second, n.parts[1])) return r;
                if (units_[it->second].events.count(n.parts[1]))
                    throw ResolveError(n.span, "'" + n.str() + "' is an event, not a value");
            }
        }
        throw ResolveError(n.span, "unknown name '" + n.str() + "'");
    }

    ExprPtr expr(const AstExprPtr& e, int unit) {
        switch (e->kind) {
            case AstExpr::Kind::BoolLit: return Expr::constant(e->bool_value);
            case AstExpr::Kind::IntLit: return Expr::constant(e->int_value, Type::integer(e->int_value, e->int_value));
            case AstExpr::Kind::Ref: return reference(e->name, unit);
            case AstExpr::Kind::Unary: {
                ExprPtr a = expr(e->operands[0], unit);
                if (e->unary_op == lang::UnaryOp::Not) {
                    if (!a->type.is_bool()) throw ResolveError(e->span, "operand of 'not' must be boolean");
                    return Expr::negation(a);
                }
                if (!a->type.is_int()) throw ResolveError(e->span, "operand of unary '-' must be an integer");
                return Expr::minus(a);
            }
            case AstExpr::Kind::Binary: {
                ExprPtr a = expr(e->operands[0], unit);
                ExprPtr b = expr(e->operands[1], unit);
                check_binary(e->binary_op, a->type, b->type, e->span);
                return Expr::binary(e->binary_op, a, b);
            }
            case AstExpr::Kind::If: {
                ExprPtr c = expr(e->operands[0], unit);
                if (!c->type.is_bool()) throw ResolveError(e->operands[0]->span, "condition of 'if' must be boolean");
                ExprPtr t = expr(e->operands[1], unit);
                ExprPtr f = expr(e->operands[2], unit);
                if (!t->type.compatible(f->type))
                    throw ResolveError(e->span, "branches of 'if' have different types");
                return Expr::ite(c, t, f);
            }
            case AstExpr::Kind::Call:
                throw ResolveError(e->span, "unsupported construct: function call '" + e->name.str() + "'");
        }
        throw ResolveError(e->span, "unsupported expression");
    }

    void check_binary(BinaryOp op, const Type& a, const Type& b, const SourceSpan& span) {
        std::string sym(lang::spelling(op));
        switch (op) {
            case BinaryOp::And:
            case BinaryOp::Or:
            case BinaryOp::Implies:
            case BinaryOp::Iff:
                if (!a.is_bool() || !b.is_bool()) throw ResolveError(span, "operands of '" + sym + "' must be boolean");
                return;
            case BinaryOp::Equal:
            case BinaryOp::NotEqual:
                if (!a.compatible(b)) throw ResolveError(span, "operands of '" + sym + "' have different types");
                return;
            default:
                if (!a.is_int() || !b.is_int()) throw ResolveError(span, "operands of '" + sym + "' must be integers");
                return;
        }
    }

    const lang::SourceSpec& spec_;
    ResolveOptions opt_;
    Model m_;

    std::unordered_set<std::string> globals_;
    std::unordered_map<std::string, int> enum_index_;
    std::unordered_map<std::string, std::pair<int, int>> literals_;
    std::unordered_map<std::string, int> global_events_;
    std::unordered_map<std::string, int> global_algs_;
    std::unordered_map<std::string, const lang::AutomatonDef*> defs_;
    std::unordered_map<std::string, int> unit_index_;
    std::vector<Unit> units_;
    std::vector<AlgSlot> slots_;
    std::vector<const lang::InvariantDecl*> invariants_;
    std::vector<const lang::EventConditionDecl*> conditions_;
};

std::optional<std::int64_t> fold(const Model& m, const ExprPtr& e) {
    switch (e->kind) {
        case Expr::Kind::Const: return e->value;
        case Expr::Kind::Disc:
        case Expr::Kind::Loc: return std::nullopt;
        case Expr::Kind::Alg: return fold(m, m.algs[e->index].definition);
        case Expr::Kind::Not: {
            auto v = fold(m, e->args[0]);
            if (!v) return v;
            return *v == 0 ? 1 : 0;
        }
        case Expr::Kind::Neg: {
            auto v = fold(m, e->args[0]);
            if (!v) return v;
            return -*v;
        }
        case Expr::Kind::Ite: {
            auto c = fold(m, e->args[0]);
            if (!c) return c;
            return fold(m, e->args[*c ? 1 : 2]);
        }
        case Expr::Kind::Binary: {
            auto a = fold(m, e->args[0]);
            auto b = fold(m, e->args[1]);
            if (!a || !b) return std::nullopt;
            switch (e->op) {
                case BinaryOp::And: return *a && *b;
                case BinaryOp::Or: return *a || *b;
                case BinaryOp::Implies: return !*a || *b;
                case BinaryOp::Iff: return (*a != 0) == (*b != 0);
                case BinaryOp::Equal: return *a == *b;
                case BinaryOp::NotEqual: return *a != *b;
                case BinaryOp::Less: return *a < *b;
                case BinaryOp::LessEq: return *a <= *b;
                case BinaryOp::Greater: return *a > *b;
                case BinaryOp::GreaterEq: return *a >= *b;
                case BinaryOp::Add: return *a + *b;
                case BinaryOp::Sub: return *a - *b;
                case BinaryOp::Mul: return *a * *b;
            }
        }
    }
    return std::nullopt;
}

}  // namespace

Model resolve(const lang::SourceSpec& spec, const ResolveOptions& options) {
    if (spec.declarations.empty()) throw ResolveError({}, "no declarations");
    return Resolver(spec, options).run();
}

std::optional<std::int64_t> constant_value(const Model& m, const ExprPtr& e) { return fold(m, e); }

}  // namespace fsc
