#include "fsc/bdd/bdd.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <tuple>
#include <unordered_map>

namespace fsc::bdd {

Bdd::Bdd(Manager* m, NodeId id) : m_(m), id_(id) {
    if (m_) m_->ref(id_);
}

Bdd::Bdd(const Bdd& o) : m_(o.m_), id_(o.id_) {
    if (m_) m_->ref(id_);
}

Bdd::Bdd(Bdd&& o) noexcept : m_(o.m_), id_(o.id_) {
    o.m_ = nullptr;
    o.id_ = 0;
}

Bdd& Bdd::operator=(const Bdd& o) {
    if (this != &o) {
        if (o.m_) o.m_->ref(o.id_);
        release();
        m_ = o.m_;
        id_ = o.id_;
    }
    return *this;
}

Bdd& Bdd::operator=(Bdd&& o) noexcept {
    if (this != &o) {
        release();
        m_ = o.m_;
        id_ = o.id_;
        o.m_ = nullptr;
        o.id_ = 0;
    }
    return *this;
}

Bdd::~Bdd() { release(); }

void Bdd::release() {
    if (m_) m_->deref(id_);
    m_ = nullptr;
    id_ = 0;
}

Bdd Bdd::operator&(const Bdd& o) const { return m_->apply_and(*this, o); }
Bdd Bdd::operator|(const Bdd& o) const { return m_->apply_or(*this, o); }
Bdd Bdd::operator^(const Bdd& o) const { return m_->apply_xor(*this, o); }
Bdd Bdd::operator-(const Bdd& o) const { return m_->apply_diff(*this, o); }
Bdd Bdd::operator!() const { return m_->negate(*this); }
bool Bdd::implies(const Bdd& o) const { return m_->apply_diff(*this, o).is_false(); }

Manager::Manager(unsigned variables, std::size_t cache_bits) : var_count_(variables) {
    nodes_.push_back({kTerminalVar, 0, 0, 0, 0});
    nodes_.push_back({kTerminalVar, 1, 1, 0, 0});
    buckets_.assign(1u << 12, 0);
    cache_.resize(std::size_t{1} << cache_bits);
    cache_mask_ = cache_.size() - 1;
}

unsigned Manager::new_variable() { return static_cast<unsigned>(var_count_++); }

Bdd Manager::var(unsigned v) {
    if (v >= var_count_) throw std::out_of_range("bdd variable " + std::to_string(v) + " not declared");
    return Bdd(this, make(v, 0, 1));
}

Bdd Manager::nvar(unsigned v) {
    if (v >= var_count_) throw std::out_of_range("bdd variable " + std::to_string(v) + " not declared");
    return Bdd(this, make(v, 1, 0));
}

Bdd Manager::cube(const std::vector<unsigned>& vars) {
    std::vector<unsigned> sorted = vars;
    std::sort(sorted.rbegin(), sorted.rend());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    NodeId r = 1;
    for (unsigned v : sorted) {
        if (v >= var_count_) throw std::out_of_range("bdd variable " + std::to_string(v) + " not declared");
        r = make(v, 0, r);
    }
    return Bdd(this, r);
}

std::size_t Manager::bucket_of(std::uint32_t var, NodeId lo, NodeId hi) const {
    std::uint64_t h = var * 0x9e3779b97f4a7c15ull;
    h ^= (lo + 0x7f4a7c15ull) * 0xbf58476d1ce4e5b9ull;
    h ^= (hi + 0x1ce4e5b9ull) * 0x94d049bb133111ebull;
    h ^= h >> 31;
    return static_cast<std::size_t>(h) & (buckets_.size() - 1);
}

void Manager::rehash(std::size_t buckets) {
    buckets_.assign(buckets, 0);
    for (NodeId n = 2; n < nodes_.size(); ++n) {
        if (nodes_[n].var == kFreeVar) continue;
        std::size_t b = bucket_of(nodes_[n].var, nodes_[n].lo, nodes_[n].hi);
        nodes_[n].next = buckets_[b];
        buckets_[b] = n;
    }
}

NodeId Manager::make(std::uint32_t var, NodeId lo, NodeId hi) {
    if (lo == hi) return lo;
    std::size_t b = bucket_of(var, lo, hi);
    for (NodeId n = buckets_[b]; n; n = nodes_[n].next) {
        const Node& nd = nodes_[n];
        if (nd.var == var && nd.lo == lo && nd.hi == hi) return n;
    }
    NodeId id;
    if (free_) {
        id = free_;
        free_ = nodes_[id].next;
        nodes_[id] = {var, lo, hi, buckets_[b], 0};
    } else {
        id = static_cast<NodeId>(nodes_.size());
        nodes_.push_back({var, lo, hi, buckets_[b], 0});
    }
    buckets_[b] = id;
    ++live_;
    ++metrics_.nodes_created;
    metrics_.peak_live_nodes = std::max<std::uint64_t>(metrics_.peak_live_nodes, live_);
    if (live_ > buckets_.size() * 2) rehash(buckets_.size() * 4);
    return id;
}

bool Manager::cache_lookup(std::uint32_t op, NodeId a, NodeId b, NodeId c, NodeId& result) {
    std::uint64_t h = (op * 0x9e3779b97f4a7c15ull) ^ (a * 0xbf58476d1ce4e5b9ull) ^ (b * 0x94d049bb133111ebull) ^
                      (c * 0xd6e8feb86659fd93ull);
    const CacheEntry& e = cache_[(h ^ (h >> 29)) & cache_mask_];
    if (e.op == op && e.a == a && e.b == b && e.c == c) {
        result = e.result;
        ++metrics_.cache_hits;
        return true;
    }
    return false;
}

void Manager::cache_store(std::uint32_t op, NodeId a, NodeId b, NodeId c, NodeId result) {
    std::uint64_t h = (op * 0x9e3779b97f4a7c15ull) ^ (a * 0xbf58476d1ce4e5b9ull) ^ (b * 0x94d049bb133111ebull) ^
                      (c * 0xd6e8feb86659fd93ull);
    cache_[(h ^ (h >> 29)) & cache_mask_] = {a, b, c, op, result};
}

void Manager::enter() {
    if (depth_ == 0 && free_ == 0 && nodes_.size() >= gc_threshold_) {
        gc();
        if (live_ * 2 > gc_threshold_) gc_threshold_ *= 2;
    }
    ++depth_;
}

void Manager::gc() {
    std::vector<std::uint8_t> mark(nodes_.size(), 0);
    mark[0] = mark[1] = 1;
    std::vector<NodeId> stack;
    for (NodeId n = 2; n < nodes_.size(); ++n)
        if (nodes_[n].var != kFreeVar && nodes_[n].ref > 0) stack.push_back(n);
    while (!stack.empty()) {
        NodeId n = stack.back();
        stack.pop_back();
        if (mark[n]) continue;
        mark[n] = 1;
        stack.push_back(nodes_[n].lo);
        stack.push_back(nodes_[n].hi);
    }
    free_ = 0;
    live_ = 0;
    for (NodeId n = static_cast<NodeId>(nodes_.size()); n-- > 2;) {
        if (mark[n]) {
            ++live_;
        } else {
            nodes_[n].var = kFreeVar;
            nodes_[n].ref = 0;
            nodes_[n].next = free_;
            free_ = n;
        }
    }
    rehash(buckets_.size());
    std::fill(cache_.begin(), cache_.end(), CacheEntry{});
    ++metrics_.garbage_collections;
}

void Manager::reset_metrics() {
    metrics_ = Metrics{};
    metrics_.peak_live_nodes = live_;
}

// ---- recursive operations ----

NodeId Manager::and_rec(NodeId a, NodeId b) {
    if (a == 0 || b == 0) return 0;
    if (a == 1 || a == b) return b;
    if (b == 1) return a;
    if (a > b) std::swap(a, b);
    NodeId r;
    if (cache_lookup(OpAnd, a, b, 0, r)) return r;
    ++metrics_.operations;
    std::uint32_t va = level(a), vb = level(b), v = std::min(va, vb);
    NodeId a0 = va == v ? nodes_[a].lo : a, a1 = va == v ? nodes_[a].hi : a;
    NodeId b0 = vb == v ? nodes_[b].lo : b, b1 = vb == v ? nodes_[b].hi : b;
    NodeId lo = and_rec(a0, b0);
    NodeId hi = and_rec(a1, b1);
    r = make(v, lo, hi);
    cache_store(OpAnd, a, b, 0, r);
    return r;
}

NodeId Manager::or_rec(NodeId a, NodeId b) {
    if (a == 1 || b == 1) return 1;
    if (a == 0 || a == b) return b;
    if (b == 0) return a;
    if (a > b) std::swap(a, b);
    NodeId r;
    if (cache_lookup(OpOr, a, b, 0, r)) return r;
    ++metrics_.operations;
    std::uint32_t va = level(a), vb = level(b), v = std::min(va, vb);
    NodeId a0 = va == v ? nodes_[a].lo : a, a1 = va == v ? nodes_[a].hi : a;
    NodeId b0 = vb == v ? nodes_[b].lo : b, b1 = vb == v ? nodes_[b].hi : b;
    NodeId lo = or_rec(a0, b0);
    NodeId hi = or_rec(a1, b1);
    r = make(v, lo, hi);
    cache_store(OpOr, a, b, 0, r);
    return r;
}

NodeId Manager::xor_rec(NodeId a, NodeId b) {
    if (a == b) return 0;
    if (a == 0) return b;
    if (b == 0) return a;
    if (a == 1) return not_rec(b);
    if (b == 1) return not_rec(a);
    if (a > b) std::swap(a, b);
    NodeId r;
    if (cache_lookup(OpXor, a, b, 0, r)) return r;
    ++metrics_.operations;
    std::uint32_t va = level(a), vb = level(b), v = std::min(va, vb);
    NodeId a0 = va == v ? nodes_[a].lo : a, a1 = va == v ? nodes_[a].hi : a;
    NodeId b0 = vb == v ? nodes_[b].lo : b, b1 = vb == v ? nodes_[b].hi : b;
    NodeId lo = xor_rec(a0, b0);
    NodeId hi = xor_rec(a1, b1);
    r = make(v, lo, hi);
    cache_store(OpXor, a, b, 0, r);
    return r;
}

NodeId Manager::diff_rec(NodeId a, NodeId b) {
    if (a == 0 || b == 1 || a == b) return 0;
    if (b == 0) return a;
    if (a == 1) return not_rec(b);
    NodeId r;
    if (cache_lookup(OpDiff, a, b, 0, r)) return r;
    ++metrics_.operations;
    std::uint32_t va = level(a), vb = level(b), v = std::min(va, vb);
    NodeId a0 = va == v ? nodes_[a].lo : a, a1 = va == v ? nodes_[a].hi : a;
    NodeId b0 = vb == v ? nodes_[b].lo : b, b1 = vb == v ? nodes_[b].hi : b;
    NodeId lo = diff_rec(a0, b0);
    NodeId hi = diff_rec(a1, b1);
    r = make(v, lo, hi);
    cache_store(OpDiff, a, b, 0, r);
    return r;
}

NodeId Manager::not_rec(NodeId a) {
    if (a <= 1) return 1 - a;
    NodeId r;
    if (cache_lookup(OpNot, a, 0, 0, r)) return r;
    ++metrics_.operations;
    std::uint32_t v = level(a);
    NodeId lo = not_rec(nodes_[a].lo);
    NodeId hi = not_rec(nodes_[a].hi);
    r = make(v, lo, hi);
    cache_store(OpNot, a, 0, 0, r);
    return r;
}

NodeId Manager::ite_rec(NodeId f, NodeId g, NodeId h) {
    if (f == 1) return g;
    if (f == 0) return h;
    if (g == h) return g;
    if (g == 1 && h == 0) return f;
    if (g == 0 && h == 1) return not_rec(f);
    if (g == 1) return or_rec(f, h);
    if (h == 0) return and_rec(f, g);
    NodeId r;
    if (cache_lookup(OpIte, f, g, h, r)) return r;
    ++metrics_.operations;
    std::uint32_t v = std::min({level(f), level(g), level(h)});
    auto cof = [&](NodeId n, bool hi) { return level(n) == v ? (hi ? nodes_[n].hi : nodes_[n].lo) : n; };
    NodeId f0 = cof(f, false), f1 = cof(f, true), g0 = cof(g, false), g1 = cof(g, true), h0 = cof(h, false),
           h1 = cof(h, true);
    NodeId lo = ite_rec(f0, g0, h0);
    NodeId hi = ite_rec(f1, g1, h1);
    r = make(v, lo, hi);
    cache_store(OpIte, f, g, h, r);
    return r;
}

NodeId Manager::exists_rec(NodeId f, NodeId cube) {
    if (f <= 1 || cube == 1) return f;
    std::uint32_t vf = level(f);
    while (cube != 1 && level(cube) < vf) cube = nodes_[cube].hi;
    if (cube == 1) return f;
    NodeId r;
    if (cache_lookup(OpExists, f, cube, 0, r)) return r;
    ++metrics_.operations;
    NodeId lo = nodes_[f].lo, hi = nodes_[f].hi;
    if (level(cube) == vf) {
        NodeId rest = nodes_[cube].hi;
        NodeId r0 = exists_rec(lo, rest);
        r = r0 == 1 ? 1 : or_rec(r0, exists_rec(hi, rest));
    } else {
        NodeId r0 = exists_rec(lo, cube);
        NodeId r1 = exists_rec(hi, cube);
        r = make(vf, r0, r1);
    }
    cache_store(OpExists, f, cube, 0, r);
    return r;
}

NodeId Manager::and_exists_rec(NodeId a, NodeId b, NodeId cube) {
    if (a == 0 || b == 0) return 0;
    if (a == 1 && b == 1) return 1;
    if (a == 1 || a == b) return exists_rec(b, cube);
    if (b == 1) return exists_rec(a, cube);
    if (cube == 1) return and_rec(a, b);
    if (a > b) std::swap(a, b);
    std::uint32_t va = level(a), vb = level(b), v = std::min(va, vb);
    while (cube != 1 && level(cube) < v) cube = nodes_[cube].hi;
    if (cube == 1) return and_rec(a, b);
    NodeId r;
    if (cache_lookup(OpAndExists, a, b, cube, r)) return r;
    ++metrics_.operations;
    NodeId a0 = va == v ? nodes_[a].lo : a, a1 = va == v ? nodes_[a].hi : a;
    NodeId b0 = vb == v ? nodes_[b].lo : b, b1 = vb == v ? nodes_[b].hi : b;
    if (level(cube) == v) {
        NodeId rest = nodes_[cube].hi;
        NodeId r0 = and_exists_rec(a0, b0, rest);
        r = r0 == 1 ? 1 : or_rec(r0, and_exists_rec(a1, b1, rest));
    } else {
        NodeId r0 = and_exists_rec(a0, b0, cube);
        NodeId r1 = and_exists_rec(a1, b1, cube);
        r = make(v, r0, r1);
    }
    cache_store(OpAndExists, a, b, cube, r);
    return r;
}

NodeId Manager::rename_rec(NodeId f, const std::vector<unsigned>& map, std::uint32_t tag) {
    if (f <= 1) return f;
    NodeId r;
    if (cache_lookup(OpRename, f, tag, 0, r)) return r;
    ++metrics_.operations;
    std::uint32_t v = level(f);
    NodeId lo = rename_rec(nodes_[f].lo, map, tag);
    NodeId hi = rename_rec(nodes_[f].hi, map, tag);
    r = make(v < map.size() ? map[v] : v, lo, hi);
    cache_store(OpRename, f, tag, 0, r);
    return r;
}

NodeId Manager::compose_rename_rec(NodeId f, const std::vector<unsigned>& map, std::uint32_t tag) {
    if (f <= 1) return f;
    NodeId r;
    if (cache_lookup(OpRename, f, tag, 1, r)) return r;
    ++metrics_.operations;
    std::uint32_t v = level(f);
    NodeId lo = compose_rename_rec(nodes_[f].lo, map, tag);
    NodeId hi = compose_rename_rec(nodes_[f].hi, map, tag);
    NodeId x = make(v < map.size() ? map[v] : v, 0, 1);
    r = ite_rec(x, hi, lo);
    cache_store(OpRename, f, tag, 1, r);
    return r;
}

NodeId Manager::restrict_rec(NodeId f, NodeId care) {
    if (care == 0) return 0;
    if (care == 1 || f <= 1) return f;
    if (f == care) return 1;
    NodeId r;
    if (cache_lookup(OpRestrict, f, care, 0, r)) return r;
    ++metrics_.operations;
    std::uint32_t vf = level(f), vc = level(care);
    if (vc < vf) {
        NodeId merged = or_rec(nodes_[care].lo, nodes_[care].hi);
        r = restrict_rec(f, merged);
    } else {
        NodeId c0 = vc == vf ? nodes_[care].lo : care, c1 = vc == vf ? nodes_[care].hi : care;
        NodeId f0 = nodes_[f].lo, f1 = nodes_[f].hi;
        if (c0 == 0) {
            r = restrict_rec(f1, c1);
        } else if (c1 == 0) {
            r = restrict_rec(f0, c0);
        } else {
            NodeId lo = restrict_rec(f0, c0);
            NodeId hi = restrict_rec(f1, c1);
            r = make(vf, lo, hi);
        }
    }
    cache_store(OpRestrict, f, care, 0, r);
    return r;
}

NodeId Manager::cofactor_rec(NodeId f, std::uint32_t var, bool value) {
    std::uint32_t v = level(f);
    if (v > var) return f;
    if (v == var) return value ? nodes_[f].hi : nodes_[f].lo;
    std::uint32_t op = value ? OpCofactor1 : OpCofactor0;
    NodeId r;
    if (cache_lookup(op, f, var, 0, r)) return r;
    ++metrics_.operations;
    NodeId lo = cofactor_rec(nodes_[f].lo, var, value);
    NodeId hi = cofactor_rec(nodes_[f].hi, var, value);
    r = make(v, lo, hi);
    cache_store(op, f, var, 0, r);
    return r;
}

// ---- public wrappers ----

#define FSC_BDD_WRAP(expr)      \
    enter();                    \
    NodeId r_ = (expr);         \
    leave();                    \
    return Bdd(this, r_)

Bdd Manager::apply_and(const Bdd& a, const Bdd& b) { FSC_BDD_WRAP(and_rec(a.id(), b.id())); }
Bdd Manager::apply_or(const Bdd& a, const Bdd& b) { FSC_BDD_WRAP(or_rec(a.id(), b.id())); }
Bdd Manager::apply_xor(const Bdd& a, const Bdd& b) { FSC_BDD_WRAP(xor_rec(a.id(), b.id())); }
Bdd Manager::apply_diff(const Bdd& a, const Bdd& b) { FSC_BDD_WRAP(diff_rec(a.id(), b.id())); }
Bdd Manager::negate(const Bdd& a) { FSC_BDD_WRAP(not_rec(a.id())); }
Bdd Manager::ite(const Bdd& f, const Bdd& g, const Bdd& h) { FSC_BDD_WRAP(ite_rec(f.id(), g.id(), h.id())); }
Bdd Manager::exists(const Bdd& f, const Bdd& cube) { FSC_BDD_WRAP(exists_rec(f.id(), cube.id())); }
Bdd Manager::forall(const Bdd& f, const Bdd& cube) {
    FSC_BDD_WRAP(not_rec(exists_rec(not_rec(f.id()), cube.id())));
}
Bdd Manager::and_exists(const Bdd& a, const Bdd& b, const Bdd& cube) {
    FSC_BDD_WRAP(and_exists_rec(a.id(), b.id(), cube.id()));
}
Bdd Manager::restrict(const Bdd& f, const Bdd& care) { FSC_BDD_WRAP(restrict_rec(f.id(), care.id())); }
Bdd Manager::cofactor(const Bdd& f, unsigned var, bool value) { FSC_BDD_WRAP(cofactor_rec(f.id(), var, value)); }

#undef FSC_BDD_WRAP

Bdd Manager::rename(const Bdd& f, const std::vector<unsigned>& map) {
    for (unsigned t : map)
        if (t >= var_count_) throw std::out_of_range("rename target " + std::to_string(t) + " not declared");
    std::uint32_t tag;
    auto it = std::find(rename_maps_.begin(), rename_maps_.end(), map);
    if (it == rename_maps_.end()) {
        tag = static_cast<std::uint32_t>(rename_maps_.size());
        rename_maps_.push_back(map);
    } else {
        tag = static_cast<std::uint32_t>(it - rename_maps_.begin());
    }
    const std::vector<unsigned>& m = rename_maps_[tag];
    std::vector<unsigned> sup = support(f);
    bool monotone = true;
    for (std::size_t i = 1; i < sup.size() && monotone; ++i) {
        unsigned a = sup[i - 1] < m.size() ? m[sup[i - 1]] : sup[i - 1];
        unsigned b = sup[i] < m.size() ? m[sup[i]] : sup[i];
        monotone = a < b;
    }
    enter();
    NodeId r = monotone ? rename_rec(f.id(), m, tag) : compose_rename_rec(f.id(), m, tag);
    leave();
    return Bdd(this, r);
}

BigInt Manager::sat_count(const Bdd& f, const std::vector<unsigned>& vars) {
    std::vector<unsigned> sorted = vars;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<int> pos(var_count_, -1);
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        if (sorted[i] >= var_count_) throw std::out_of_range("count variable not declared");
        pos[sorted[i]] = static_cast<int>(i);
    }
    const int total = static_cast<int>(sorted.size());
    auto position = [&](NodeId n) -> int {
        if (n <= 1) return total;
        int p = pos[level(n)];
        if (p < 0) throw std::invalid_argument("sat_count: variable " + std::to_string(level(n)) + " outside the counted set");
        return p;
    };
    std::unordered_map<NodeId, BigInt> memo;
    auto rec = [&](auto&& self, NodeId n) -> BigInt {
        if (n == 0) return 0;
        if (n == 1) return 1;
        auto it = memo.find(n);
        if (it != memo.end()) return it->second;
        int p = position(n);
        NodeId lo = nodes_[n].lo, hi = nodes_[n].hi;
        BigInt c = (self(self, lo) << (position(lo) - p - 1)) + (self(self, hi) << (position(hi) - p - 1));
        memo.emplace(n, c);
        return c;
    };
    return rec(rec, f.id()) << position(f.id());
}

BigInt Manager::sat_count(const Bdd& f) {
    std::vector<unsigned> all(var_count_);
    for (std::size_t i = 0; i < var_count_; ++i) all[i] = static_cast<unsigned>(i);
    return sat_count(f, all);
}

std::vector<int> Manager::pick_one(const Bdd& f) {
    if (f.is_false()) return {};
    std::vector<int> out(var_count_, -1);
    NodeId n = f.id();
    while (n > 1) {
        if (nodes_[n].lo != 0) {
            out[level(n)] = 0;
            n = nodes_[n].lo;
        } else {
            out[level(n)] = 1;
            n = nodes_[n].hi;
        }
    }
    return out;
}

std::vector<unsigned> Manager::support(const Bdd& f) {
    std::set<unsigned> vars;
    std::vector<std::uint8_t> seen(nodes_.size(), 0);
    std::vector<NodeId> stack{f.id()};
    while (!stack.empty()) {
        NodeId n = stack.back();
        stack.pop_back();
        if (n <= 1 || seen[n]) continue;
        seen[n] = 1;
        vars.insert(level(n));
        stack.push_back(nodes_[n].lo);
        stack.push_back(nodes_[n].hi);
    }
    return {vars.begin(), vars.end()};
}

std::size_t Manager::node_count(const std::vector<Bdd>& roots) {
    std::vector<std::uint8_t> seen(nodes_.size(), 0);
    std::vector<NodeId> stack;
    for (const auto& r : roots) stack.push_back(r.id());
    std::size_t count = 0;
    while (!stack.empty()) {
        NodeId n = stack.back();
        stack.pop_back();
        if (n <= 1 || seen[n]) continue;
        seen[n] = 1;
        ++count;
        stack.push_back(nodes_[n].lo);
        stack.push_back(nodes_[n].hi);
    }
    return count;
}

std::size_t Manager::node_count(const Bdd& f) { return node_count(std::vector<Bdd>{f}); }

void Manager::dump(std::ostream& out, const std::vector<Bdd>& roots, const std::vector<std::string>& names) {
    std::vector<std::uint8_t> seen(nodes_.size(), 0);
    auto rec = [&](auto&& self, NodeId n) -> void {
        if (n <= 1 || seen[n]) return;
        seen[n] = 1;
        self(self, nodes_[n].lo);
        self(self, nodes_[n].hi);
        out << n << ' ';
        if (level(n) < names.size())
            out << names[level(n)];
        else
            out << level(n);
        out << ' ' << nodes_[n].lo << ' ' << nodes_[n].hi << '\n';
    };
    for (const auto& r : roots) rec(rec, r.id());
    for (const auto& r : roots) out << "root " << r.id() << '\n';
}

bool Manager::check_invariants() const {
    std::set<std::tuple<std::uint32_t, NodeId, NodeId>> keys;
    std::size_t live = 0;
    for (NodeId n = 2; n < nodes_.size(); ++n) {
        const Node& nd = nodes_[n];
        if (nd.var == kFreeVar) continue;
        ++live;
        if (nd.lo == nd.hi) return false;
        if (nd.var >= var_count_) return false;
        for (NodeId c : {nd.lo, nd.hi}) {
            if (c >= nodes_.size() || nodes_[c].var == kFreeVar) return false;
            if (c > 1 && nodes_[c].var <= nd.var) return false;
        }
        if (!keys.insert({nd.var, nd.lo, nd.hi}).second) return false;
        bool found = false;
        for (NodeId m = buckets_[bucket_of(nd.var, nd.lo, nd.hi)]; m; m = nodes_[m].next)
            if (m == n) found = true;
        if (!found) return false;
    }
    return live == live_;
}

}  // namespace fsc::bdd
