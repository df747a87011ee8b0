#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace nek {

// Structural problems in user-supplied data (cycles, broken involutions,
// malformed values). The CLI maps these to exit code 1.
class ValidationError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A caller invoked an operation outside its stated precondition
// (e.g. asking for an atom decomposition of the zero event).
class PreconditionError : public std::logic_error {
    using std::logic_error::logic_error;
};

// A theorem cross-check failed at runtime. If this ever fires the library
// itself is inconsistent, so it is a logic_error, not a user error.
class ConsistencyError : public std::logic_error {
    using std::logic_error::logic_error;
};

// Deterministic counterexample: `kind` names the violated condition and
// `elems` lists the elements involved, in the order they were found by the
// canonical scan (ascending element index, lexicographic for tuples).
struct Witness {
    std::string kind;
    std::vector<int> elems;
};

struct PosetCheck {
    bool ok = true;
    std::optional<Witness> witness;
};

// A finite bounded poset carrying an antitone involution ' with 0' = 1.
// Elements are dense indices; the element order is the order in which the
// caller supplied them and is the canonical scan order everywhere.
class InvolutivePoset {
  public:
    // Builds the poset from generator pairs: reflexive-transitive closure is
    // taken, then antisymmetry, unique bounds, totality/symmetry of the prime
    // pairs and antitonicity are verified. Throws ValidationError with the
    // offending element names otherwise.
    static InvolutivePoset validate(std::vector<std::string> names,
                                    const std::vector<std::pair<int, int>>& leq_generators,
                                    const std::vector<std::pair<int, int>>& prime_pairs);

    int size() const { return static_cast<int>(names_.size()); }
    const std::string& name(int e) const { return names_[e]; }
    const std::vector<std::string>& names() const { return names_; }

    bool leq(int a, int b) const { return leq_[a][b]; }
    bool lt(int a, int b) const { return a != b && leq_[a][b]; }
    int prime(int e) const { return prime_[e]; }
    int bottom() const { return bottom_; }
    int top() const { return top_; }

    // Greatest lower / least upper bound if it exists in the poset.
    std::optional<int> meet(int p, int q) const;
    std::optional<int> join(int p, int q) const;

    // Elements covering bottom, ascending.
    std::vector<int> atoms() const;
    bool is_atom(int e) const;

    // Covering pairs (a, b) with a covered by b, ascending by (a, b).
    std::vector<std::pair<int, int>> covers() const;

    // Longest chain from bottom to e, counted in edges.
    int height(int e) const;
    int length() const { return height(top_); }

    bool operator==(const InvolutivePoset& other) const = default;

    // Empty placeholder; only validate() produces a usable poset.
    InvolutivePoset() = default;

  private:
    std::vector<std::string> names_;
    std::vector<std::vector<bool>> leq_;
    std::vector<int> prime_;
    int bottom_ = -1;
    int top_ = -1;
};

// Every pair has a meet and a join. Witness: first pair missing one.
PosetCheck is_lattice(const InvolutivePoset& p);

// p' is a complement of p: meet(p, p') = 0 and join(p, p') = 1 whenever those
// bounds exist; a missing bound also fails. Witness: first bad element.
PosetCheck is_orthoposet(const InvolutivePoset& p);

// Orthomodular law p <= q implies q = join(p, meet(q, p')). Requires an
// orthoposet; not restricted to lattices, the law fails when a needed
// meet/join is missing. Witness: first bad pair (p, q).
PosetCheck is_orthomodular(const InvolutivePoset& p);

// Distributivity of meet over join on all triples. Requires a lattice.
// Witness: first bad triple.
PosetCheck is_distributive(const InvolutivePoset& p);

}  // namespace nek
