#pragma once

#include <array>
#include <iosfwd>
#include <map>
#include <utility>

#include "bs5/polynomial.hpp"
#include "bs5/rational.hpp"

namespace bs5 {

// Coefficient table of the k-step pair polynomial q_k(x,y) = sum a_{i,j} x^i y^j.
// Sparse: absent entries are zero. Nonzero support stays within i <= 3k,
// j <= 3k-1; advance() asserts this and fails loudly if it is ever violated.
class CoeffTable {
  public:
    using Key = std::pair<int, int>;

    explicit CoeffTable(int k) : k_(k) {}

    int k() const { return k_; }
    const std::map<Key, Rational>& entries() const { return entries_; }

    const Rational& at(int i, int j) const {
        static const Rational zero{0};
        auto it = entries_.find({i, j});
        return it == entries_.end() ? zero : it->second;
    }

    void set(int i, int j, Rational v);

    // a_{0,j} = 0 always; a_{1,0} = 0 for k >= 2 (the k=1 seed has a_{1,0}=1);
    // support bound i <= 3k, j <= 3k-1. Throws std::logic_error on violation.
    void check_invariants() const;

    bool operator==(const CoeffTable& other) const {
        return k_ == other.k_ && entries_ == other.entries_;
    }

  private:
    int k_;
    std::map<Key, Rational> entries_;
};

// Stabilized limits beta_{i,j} read off at step k_used.
struct LimitTable {
    std::map<CoeffTable::Key, Rational> entries;
    int k_used = 0;

    const Rational& at(int i, int j) const;
    bool contains(int i, int j) const { return entries.count({i, j}) != 0; }
};

// Hard-coded k=1 table from the one-step density.
CoeffTable seed_table_k1();

// Exact step k -> k+1 of the coefficient recursion.
CoeffTable advance(const CoeffTable& table);

// Iterates advance() to k_max and returns beta_{i,j} for i+j+1 <= k_max.
// Entries with i+j+1 <= k_max-1 are verified unchanged over the last step;
// a change throws std::runtime_error (stabilization violation).
LimitTable limits(int k_max);

// q_k(x,y) in floating point. Used on ordered pairs x <= y only.
double eval_qk(const CoeffTable& table, double x, double y);

// Exact integral of g_k over [0,1]^5: 10 * sum a_{i,j} / ((i+1)(i+j+2)).
Rational integral_gk(const CoeffTable& table);

// Exact one-dimensional marginal density polynomial
//   3/5 + 2*int_0^x q_k(y,x) dy + 2*int_x^1 q_k(x,y) dy.
Polynomial marginal_poly_k(const CoeffTable& table);

// Boundary data (B1(1), B1'(1), B1''(1), B1'''(1), B1''''(1))
//   = (1/5, beta_{1,0}, -beta_{1,1}, 2 beta_{1,2}, -6 beta_{1,3}).
// Throws std::runtime_error if a required beta_{1,j} is absent.
std::array<Rational, 5> boundary_conditions_from_limits(const LimitTable& lt);

// Lossless serialization; rationals as "p/q" strings.
void write_csv(const CoeffTable& table, std::ostream& os);
CoeffTable read_csv(std::istream& is);
std::string to_json(const CoeffTable& table);
CoeffTable table_from_json(const std::string& json);

}  // namespace bs5
