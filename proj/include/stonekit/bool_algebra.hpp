#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <vector>

#include "stonekit/errors.hpp"

namespace stonekit {

// Element of a finite Boolean algebra: an index into its operation tables.
using elem = std::uint16_t;

// Hard cap: 2^16 elements, i.e. 16 atoms.  Past that the exhaustive table
// checks (and the tables themselves) stop being desk-scale.
inline constexpr std::size_t max_algebra_size = std::size_t{1} << 16;
inline constexpr unsigned max_atoms = 16;

// Raw table bundle: the wire format of an algebra before validation.
// meet and join are row-major size*size tables; neg has one entry per element.
struct raw_tables {
    std::size_t size = 0;
    elem zero = 0;
    elem one = 0;
    std::vector<elem> meet;
    std::vector<elem> join;
    std::vector<elem> neg;
};

class bool_algebra;
using algebra_ref = std::shared_ptr<const bool_algebra>;

namespace detail {
// Construction without the law scan, for algebras correct by construction
// (powersets, subalgebras of validated algebras).  Shape is still checked.
algebra_ref adopt_tables(raw_tables t);
} // namespace detail

// A finite Boolean algebra as explicit operation tables.  Instances are
// immutable; filters, homs and spaces hold them through shared algebra_ref
// handles, so values stay cheap to copy and safe to share across threads.
class bool_algebra {
public:
    std::size_t size() const noexcept { return t_.size; }
    elem zero() const noexcept { return t_.zero; }
    elem one() const noexcept { return t_.one; }

    elem meet(std::size_t a, std::size_t b) const { return t_.meet[a * t_.size + b]; }
    elem join(std::size_t a, std::size_t b) const { return t_.join[a * t_.size + b]; }
    elem neg(std::size_t a) const { return t_.neg[a]; }

    // a <= b  iff  a /\ b = a
    bool leq(std::size_t a, std::size_t b) const { return meet(a, b) == a; }

    const raw_tables& tables() const noexcept { return t_; }

    bool operator==(const bool_algebra& other) const {
        return t_.size == other.t_.size && t_.zero == other.t_.zero &&
               t_.one == other.t_.one && t_.meet == other.t_.meet &&
               t_.join == other.t_.join && t_.neg == other.t_.neg;
    }

private:
    explicit bool_algebra(raw_tables t) : t_(std::move(t)) {}

    raw_tables t_;

    friend algebra_ref detail::adopt_tables(raw_tables);
};

// ---------------------------------------------------------------------------
// Construction
// ---------------------------------------------------------------------------

// Checks every law over the raw tables, in the fixed certification order
// commutativity, associativity, absorption, distributivity, complement,
// bounds, and returns the algebra.  The first broken law wins; within one
// (a,b,c) scan step the meet form is checked before the join form.  Throws
// axiom_violation with the law name and witness elements, or a
// DegenerateAlgebra error when zero = one.
algebra_ref validate_algebra(const raw_tables& t);

// Powerset of {1..atom_count}: element index == subset bitmask.
algebra_ref powerset_algebra(unsigned atom_count);

// Idempotents of Z/n under  e /\ f = ef,  e \/ f = e + f - ef,  -e = 1 - e.
algebra_ref idempotent_algebra(long long n);

// The e in [0, n) with e^2 = e (mod n), ascending: the carrier (and the
// natural element labels) of idempotent_algebra(n).
std::vector<long long> ring_idempotents(long long n);

// The two-element algebra, shared instance (zero = 0, one = 1).
const algebra_ref& two_algebra();

// ---------------------------------------------------------------------------
// Atoms
// ---------------------------------------------------------------------------

struct atom_basis {
    std::vector<elem> atoms;            // minimal nonzero elements, ascending
    std::vector<std::uint32_t> mask_of; // element -> bitmask over `atoms`
};

// For a valid algebra, mask_of is the powerset isomorphism sending an element
// to its set of atoms below.
atom_basis atoms_of(const bool_algebra& B);

// ---------------------------------------------------------------------------
// Generated subalgebras
// ---------------------------------------------------------------------------

struct subalgebra {
    algebra_ref algebra;        // the closure, reindexed 0..k-1
    std::vector<elem> carrier;  // sub index -> index in the ambient algebra
    std::vector<elem> granules; // atoms of the closure as ambient indices, ascending
};

// Closure of gens (plus 0 and 1) under meet, join and complement.  The
// granules are the atoms of the closure: the finest resolution the generators
// can distinguish.
subalgebra subalgebra_generated(const algebra_ref& B, const std::vector<elem>& gens);

// ---------------------------------------------------------------------------
// Homomorphisms
// ---------------------------------------------------------------------------

struct bool_hom {
    algebra_ref source;
    algebra_ref target;
    std::vector<elem> map;  // source index -> target index
};

// Exhaustive preservation check of 0, 1, meet, join and neg.
bool check_hom(const bool_hom& h);

// g after f; requires f.target = g.source (structurally equal tables).
bool_hom compose_homs(const bool_hom& g, const bool_hom& f);

bool_hom identity_hom(const algebra_ref& B);

// All homomorphisms B -> 2, ascending by the atom each one sends to 1.
std::vector<bool_hom> homs_to_two(const algebra_ref& B);

} // namespace stonekit
