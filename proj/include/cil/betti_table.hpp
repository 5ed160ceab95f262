#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>

namespace cil {

/// Whether a table describes the ideal I or the quotient R/I.
enum class BettiSubject { ideal, quotient };

/// Sparse graded Betti numbers β_{i,j}; absent entries are zero.
class BettiTable {
public:
    using Key = std::pair<int, int>;  // (i, j)

    explicit BettiTable(BettiSubject subject = BettiSubject::ideal) : subject_(subject) {}

    BettiSubject subject() const { return subject_; }
    const std::map<Key, std::uint64_t>& entries() const { return entries_; }
    bool empty() const { return entries_.empty(); }

    std::uint64_t at(int i, int j) const;
    /// Adds `count` to β_{i,j}; zero counts are ignored.
    void add(int i, int j, std::uint64_t count);
    /// Σ_j β_{i,j}.
    std::uint64_t total(int i) const;

    /// R/I view of an ideal table (β_{i+1,j}(R/I) = β_{i,j}(I), β_{0,0}(R/I) = 1).
    BettiTable as_quotient() const;
    /// I view of a quotient table.
    BettiTable as_ideal() const;

    friend bool operator==(const BettiTable&, const BettiTable&) = default;

private:
    BettiSubject subject_;
    std::map<Key, std::uint64_t> entries_;
};

struct RegPd {
    int reg = 0;
    int pd = 0;
    friend bool operator==(const RegPd&, const RegPd&) = default;
};

/// reg = max{j - i}, pd = max{i} over nonzero entries. Throws Undefined on an empty table.
RegPd reg_pd_from_table(const BettiTable& table);

/// True iff every nonzero β_{i,j} of the ideal table has j = i + degree.
bool has_linear_resolution(const BettiTable& table, int degree);

/// Grid with one row per homological degree i and one column per j - i.
std::string render_text(const BettiTable& table);

const char* to_string(BettiSubject subject);

}  // namespace cil
