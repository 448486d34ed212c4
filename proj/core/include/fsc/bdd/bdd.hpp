#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace fsc::bdd {

using BigInt = boost::multiprecision::cpp_int;
using NodeId = std::uint32_t;

class Manager;

/// Reference-counted handle to a node of one Manager.
class Bdd {
public:
    Bdd() = default;
    Bdd(Manager* m, NodeId id);
    Bdd(const Bdd& o);
    Bdd(Bdd&& o) noexcept;
    Bdd& operator=(const Bdd& o);
    Bdd& operator=(Bdd&& o) noexcept;
    ~Bdd();

    NodeId id() const { return id_; }
    Manager* manager() const { return m_; }
    bool valid() const { return m_ != nullptr; }
    bool is_false() const { return id_ == 0; }
    bool is_true() const { return id_ == 1; }
    bool is_const() const { return id_ <= 1; }

    Bdd operator&(const Bdd& o) const;
    Bdd operator|(const Bdd& o) const;
    Bdd operator^(const Bdd& o) const;
    Bdd operator-(const Bdd& o) const;  // a and not b
    Bdd operator!() const;
    Bdd& operator&=(const Bdd& o) { return *this = *this & o; }
    Bdd& operator|=(const Bdd& o) { return *this = *this | o; }
    Bdd& operator-=(const Bdd& o) { return *this = *this - o; }
    bool operator==(const Bdd& o) const { return m_ == o.m_ && id_ == o.id_; }
    bool operator!=(const Bdd& o) const { return !(*this == o); }

    /// True if every assignment satisfying this one satisfies o.
    bool implies(const Bdd& o) const;

private:
    void release();

    Manager* m_ = nullptr;
    NodeId id_ = 0;
};

struct Metrics {
    std::uint64_t operations = 0;    // recursive apply steps that missed the cache
    std::uint64_t cache_hits = 0;
    std::uint64_t peak_live_nodes = 0;
    std::uint64_t garbage_collections = 0;
    std::uint64_t nodes_created = 0;
};

class Manager {
public:
    explicit Manager(unsigned variables = 0, std::size_t cache_bits = 18);
    Manager(const Manager&) = delete;
    Manager& operator=(const Manager&) = delete;

    unsigned variable_count() const { return static_cast<unsigned>(var_count_); }
    /// Appends a variable below all existing ones.
    unsigned new_variable();

    Bdd constant(bool value) { return Bdd(this, value ? 1 : 0); }
    Bdd var(unsigned v);
    Bdd nvar(unsigned v);
    /// Conjunction of the given positive literals.
    Bdd cube(const std::vector<unsigned>& vars);

    Bdd apply_and(const Bdd& a, const Bdd& b);
    Bdd apply_or(const Bdd& a, const Bdd& b);
    Bdd apply_xor(const Bdd& a, const Bdd& b);
    Bdd apply_diff(const Bdd& a, const Bdd& b);
    Bdd negate(const Bdd& a);
    Bdd ite(const Bdd& f, const Bdd& g, const Bdd& h);

    Bdd exists(const Bdd& f, const Bdd& cube);
    Bdd forall(const Bdd& f, const Bdd& cube);
    /// exists cube. (a and b), without building the conjunction.
    Bdd and_exists(const Bdd& a, const Bdd& b, const Bdd& cube);
    /// Replaces variable v by map[v]; map must be a permutation on the support.
    Bdd rename(const Bdd& f, const std::vector<unsigned>& map);
    /// Coudert-Madre restrict: agrees with f wherever care holds, usually smaller.
    Bdd restrict(const Bdd& f, const Bdd& care);
    /// Cofactor with respect to a single literal.
    Bdd cofactor(const Bdd& f, unsigned var, bool value);

    /// Number of satisfying assignments over `vars`; the support of f must be within vars.
    BigInt sat_count(const Bdd& f, const std::vector<unsigned>& vars);
    /// Number of satisfying assignments over all variables of the manager.
    BigInt sat_count(const Bdd& f);
    /// One satisfying assignment (value per variable, -1 for don't care); empty if f is false.
    std::vector<int> pick_one(const Bdd& f);

    std::vector<unsigned> support(const Bdd& f);
    std::size_t node_count(const Bdd& f);
    std::size_t node_count(const std::vector<Bdd>& roots);

    unsigned node_var(NodeId n) const { return nodes_[n].var; }
    NodeId node_low(NodeId n) const { return nodes_[n].lo; }
    NodeId node_high(NodeId n) const { return nodes_[n].hi; }

    /// Reclaims nodes not reachable from any live handle; clears the operation cache.
    void gc();
    std::size_t live_nodes() const { return live_; }
    std::size_t allocated_nodes() const { return nodes_.size(); }
    const Metrics& metrics() const { return metrics_; }
    void reset_metrics();

    /// Node list `id var low high`, one line per node, children before parents.
    void dump(std::ostream& out, const std::vector<Bdd>& roots, const std::vector<std::string>& names = {});

    /// Checks structural invariants (reducedness, unique table, ordering); for tests.
    bool check_invariants() const;

private:
    friend class Bdd;

    struct Node {
        std::uint32_t var;
        NodeId lo;
        NodeId hi;
        NodeId next;
        std::uint32_t ref;
    };
    struct CacheEntry {
        NodeId a = 0, b = 0, c = 0;
        std::uint32_t op = 0;  // 0 = empty
        NodeId result = 0;
    };
    enum Op : std::uint32_t { OpAnd = 1, OpOr, OpXor, OpDiff, OpNot, OpIte, OpExists, OpAndExists, OpRename, OpRestrict,
                              OpCofactor0, OpCofactor1 };

    static constexpr std::uint32_t kTerminalVar = 0xffffffffu;
    static constexpr std::uint32_t kFreeVar = 0xfffffffeu;

    void ref(NodeId n) {
        if (n > 1) ++nodes_[n].ref;
    }
    void deref(NodeId n) {
        if (n > 1) --nodes_[n].ref;
    }
    std::uint32_t level(NodeId n) const { return nodes_[n].var; }

    NodeId make(std::uint32_t var, NodeId lo, NodeId hi);
    void rehash(std::size_t buckets);
    std::size_t bucket_of(std::uint32_t var, NodeId lo, NodeId hi) const;

    bool cache_lookup(std::uint32_t op, NodeId a, NodeId b, NodeId c, NodeId& result);
    void cache_store(std::uint32_t op, NodeId a, NodeId b, NodeId c, NodeId result);

    void enter();
    void leave() { --depth_; }

    NodeId and_rec(NodeId a, NodeId b);
    NodeId or_rec(NodeId a, NodeId b);
    NodeId xor_rec(NodeId a, NodeId b);
    NodeId diff_rec(NodeId a, NodeId b);
    NodeId not_rec(NodeId a);
    NodeId ite_rec(NodeId f, NodeId g, NodeId h);
    NodeId exists_rec(NodeId f, NodeId cube);
    NodeId and_exists_rec(NodeId a, NodeId b, NodeId cube);
    NodeId rename_rec(NodeId f, const std::vector<unsigned>& map, std::uint32_t tag);
    NodeId compose_rename_rec(NodeId f, const std::vector<unsigned>& map, std::uint32_t tag);
    NodeId restrict_rec(NodeId f, NodeId care);
    NodeId cofactor_rec(NodeId f, std::uint32_t var, bool value);

    std::vector<Node> nodes_;
    std::vector<NodeId> buckets_;
    std::vector<CacheEntry> cache_;
    std::size_t cache_mask_;
    NodeId free_ = 0;  // head of free list, 0 = empty
    std::size_t live_ = 0;
    std::size_t var_count_ = 0;
    std::size_t gc_threshold_ = 1u << 16;
    int depth_ = 0;
    std::uint32_t rename_tag_ = 0;
    std::vector<std::vector<unsigned>> rename_maps_;
    Metrics metrics_;
};

}  // namespace fsc::bdd
