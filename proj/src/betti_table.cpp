#include "cil/betti_table.hpp"

#include "cil/errors.hpp"

#include <algorithm>
#include <iomanip>
#include <limits>
#include <set>
#include <sstream>

namespace cil {

std::uint64_t BettiTable::at(int i, int j) const {
    const auto it = entries_.find({i, j});
    return it == entries_.end() ? 0 : it->second;
}

void BettiTable::add(int i, int j, std::uint64_t count) {
    if (count == 0) return;
    if (i < 0 || j < 0) throw InvalidInput("Betti indices must be nonnegative");
    entries_[{i, j}] += count;
}

std::uint64_t BettiTable::total(int i) const {
    std::uint64_t sum = 0;
    for (const auto& [key, b] : entries_)
        if (key.first == i) sum += b;
    return sum;
}

BettiTable BettiTable::as_quotient() const {
    if (subject_ == BettiSubject::quotient) return *this;
    BettiTable q(BettiSubject::quotient);
    if (at(0, 0) != 0) return q;  // I = R, so R/I = 0
    q.add(0, 0, 1);
    for (const auto& [key, b] : entries_) q.add(key.first + 1, key.second, b);
    return q;
}

BettiTable BettiTable::as_ideal() const {
    if (subject_ == BettiSubject::ideal) return *this;
    BettiTable ideal(BettiSubject::ideal);
    if (empty()) {
        ideal.add(0, 0, 1);  // R/I = 0 means I = R
        return ideal;
    }
    for (const auto& [key, b] : entries_)
        if (key.first > 0) ideal.add(key.first - 1, key.second, b);
    return ideal;
}

RegPd reg_pd_from_table(const BettiTable& table) {
    if (table.empty()) throw Undefined("reg and pd of the zero module are undefined");
    RegPd out{std::numeric_limits<int>::min(), 0};
    for (const auto& [key, b] : table.entries()) {
        out.reg = std::max(out.reg, key.second - key.first);
        out.pd = std::max(out.pd, key.first);
    }
    return out;
}

bool has_linear_resolution(const BettiTable& table, int degree) {
    if (table.subject() != BettiSubject::ideal) throw InvalidInput("linearity is a property of ideal tables");
    if (table.empty()) throw InvalidInput("the zero ideal has no resolution");
    return std::all_of(table.entries().begin(), table.entries().end(),
                       [&](const auto& e) { return e.first.second == e.first.first + degree; });
}

std::string render_text(const BettiTable& table) {
    std::set<int> rows;
    std::set<int> cols;
    std::uint64_t widest = 1;
    for (const auto& [key, b] : table.entries()) {
        rows.insert(key.first);
        cols.insert(key.second - key.first);
        widest = std::max(widest, b);
    }
    const int width = std::max<int>(3, static_cast<int>(std::to_string(widest).size()) + 1);
    std::ostringstream out;
    out << "i\\j-i";
    for (int c : cols) out << std::setw(width) << c;
    out << '\n';
    for (int r : rows) {
        out << std::setw(4) << r << ':';
        for (int c : cols) {
            const std::uint64_t b = table.at(r, r + c);
            if (b == 0)
                out << std::setw(width) << '.';
            else
                out << std::setw(width) << b;
        }
        out << '\n';
    }
    return out.str();
}

const char* to_string(BettiSubject subject) { return subject == BettiSubject::ideal ? "ideal" : "quotient"; }

}  // namespace cil
