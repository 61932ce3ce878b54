/*
   Copyright 2026 The crystal Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <compare>
#include <string>
#include <vector>

#include "crystal/error.hpp"

namespace crystal {

/// Element of a grading group: an exponent vector for Z^n, a residue for
/// Z/nZ, or an index into a multiplication table. Ordered lexicographically.
class GroupElt {
public:
    GroupElt() = default;
    explicit GroupElt(std::vector<long> data) : data_(std::move(data)) {}
    static GroupElt of(long x) { return GroupElt(std::vector<long>{x}); }

    const std::vector<long>& data() const { return data_; }
    std::size_t size() const { return data_.size(); }
    long operator[](std::size_t i) const { return data_.at(i); }

    friend auto operator<=>(const GroupElt&, const GroupElt&) = default;
    friend bool operator==(const GroupElt&, const GroupElt&) = default;

    /// "2", "-1", "1,0".
    std::string str() const {
        std::string out;
        for (std::size_t i = 0; i < data_.size(); ++i) {
            if (i) out += ",";
            out += std::to_string(data_[i]);
        }
        return out;
    }

private:
    std::vector<long> data_;
};

class GradingGroup {
public:
    enum class Kind { FreeAbelian, Cyclic, FiniteTable };

    static GradingGroup free_abelian(std::size_t rank) {
        if (rank == 0) raise(ErrorCode::InvalidGroup, "Z^0 is not supported; use C1");
        GradingGroup g;
        g.kind_ = Kind::FreeAbelian;
        g.size_ = rank;
        return g;
    }

    static GradingGroup cyclic(std::size_t modulus) {
        if (modulus < 1) raise(ErrorCode::InvalidGroup, "cyclic modulus must be at least 1");
        GradingGroup g;
        g.kind_ = Kind::Cyclic;
        g.size_ = modulus;
        return g;
    }

    /// Group given by a full multiplication table over indices 0..n-1.
    /// Closure, identity, inverses and associativity are verified.
    static GradingGroup finite_table(std::vector<std::vector<int>> table) {
        const std::size_t n = table.size();
        if (n == 0) raise(ErrorCode::InvalidGroup, "empty multiplication table");
        for (const auto& row : table) {
            if (row.size() != n) raise(ErrorCode::InvalidGroup, "multiplication table is not square");
            for (int x : row)
                if (x < 0 || static_cast<std::size_t>(x) >= n) raise(ErrorCode::InvalidGroup, "table entry out of range");
        }
        int identity = -1;
        for (std::size_t e = 0; e < n && identity < 0; ++e) {
            bool ok = true;
            for (std::size_t g = 0; g < n && ok; ++g)
                ok = table[e][g] == static_cast<int>(g) && table[g][e] == static_cast<int>(g);
            if (ok) identity = static_cast<int>(e);
        }
        if (identity < 0) raise(ErrorCode::InvalidGroup, "multiplication table has no identity");
        std::vector<int> inverse(n, -1);
        for (std::size_t g = 0; g < n; ++g) {
            for (std::size_t h = 0; h < n; ++h)
                if (table[g][h] == identity && table[h][g] == identity) inverse[g] = static_cast<int>(h);
            if (inverse[g] < 0) raise(ErrorCode::InvalidGroup, "element " + std::to_string(g) + " has no inverse");
        }
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                for (std::size_t c = 0; c < n; ++c)
                    if (table[table[a][b]][c] != table[a][table[b][c]])
                        raise(ErrorCode::InvalidGroup, "multiplication table is not associative");
        GradingGroup g;
        g.kind_ = Kind::FiniteTable;
        g.size_ = n;
        g.table_ = std::move(table);
        g.identity_ = identity;
        g.inverse_ = std::move(inverse);
        return g;
    }

    Kind kind() const { return kind_; }
    bool is_finite() const { return kind_ != Kind::FreeAbelian; }
    /// Rank of Z^n.
    std::size_t rank() const { return kind_ == Kind::FreeAbelian ? size_ : 0; }
    /// Number of elements of a finite group.
    std::size_t order() const { return kind_ == Kind::FreeAbelian ? 0 : size_; }
    const std::vector<std::vector<int>>& table() const { return table_; }

    GroupElt identity() const {
        switch (kind_) {
        case Kind::FreeAbelian: return GroupElt(std::vector<long>(size_, 0));
        case Kind::Cyclic: return GroupElt::of(0);
        case Kind::FiniteTable: return GroupElt::of(identity_);
        }
        return {};
    }

    /// i-th standard generator of Z^n.
    GroupElt generator(std::size_t i) const {
        std::vector<long> v(size_, 0);
        v.at(i) = 1;
        return GroupElt(std::move(v));
    }

    bool contains(const GroupElt& g) const {
        if (kind_ == Kind::FreeAbelian) return g.size() == size_;
        return g.size() == 1 && g[0] >= 0 && static_cast<std::size_t>(g[0]) < size_;
    }

    void check(const GroupElt& g) const {
        if (!contains(g)) raise(ErrorCode::GroupMismatch, "element [" + g.str() + "] is not in " + name());
    }

    GroupElt op(const GroupElt& g, const GroupElt& h) const {
        check(g);
        check(h);
        switch (kind_) {
        case Kind::FreeAbelian: {
            std::vector<long> v(size_);
            for (std::size_t i = 0; i < size_; ++i) v[i] = g[i] + h[i];
            return GroupElt(std::move(v));
        }
        case Kind::Cyclic: return GroupElt::of((g[0] + h[0]) % static_cast<long>(size_));
        case Kind::FiniteTable: return GroupElt::of(table_[g[0]][h[0]]);
        }
        return {};
    }

    GroupElt inverse(const GroupElt& g) const {
        check(g);
        switch (kind_) {
        case Kind::FreeAbelian: {
            std::vector<long> v(size_);
            for (std::size_t i = 0; i < size_; ++i) v[i] = -g[i];
            return GroupElt(std::move(v));
        }
        case Kind::Cyclic: return GroupElt::of((static_cast<long>(size_) - g[0]) % static_cast<long>(size_));
        case Kind::FiniteTable: return GroupElt::of(inverse_[g[0]]);
        }
        return {};
    }

    bool is_identity(const GroupElt& g) const { return g == identity(); }

    /// Reduces raw coordinates into canonical form (residues mod n for cyclic groups).
    GroupElt make(std::vector<long> coords) const {
        if (kind_ == Kind::Cyclic && coords.size() == 1) {
            const long n = static_cast<long>(size_);
            coords[0] = ((coords[0] % n) + n) % n;
        }
        GroupElt g(std::move(coords));
        check(g);
        return g;
    }

    /// Box [-radius, radius]^n for Z^n, every element for finite groups;
    /// lexicographic order.
    std::vector<GroupElt> window(long radius) const {
        std::vector<GroupElt> out;
        if (is_finite()) {
            for (std::size_t i = 0; i < size_; ++i) out.push_back(GroupElt::of(static_cast<long>(i)));
            return out;
        }
        std::vector<long> v(size_, -radius);
        while (true) {
            out.emplace_back(v);
            std::size_t i = size_;
            while (i > 0) {
                --i;
                if (v[i] < radius) {
                    ++v[i];
                    break;
                }
                v[i] = -radius;
                if (i == 0) return out;
            }
        }
    }

    /// "Z", "Z^2", "C3" or "table".
    std::string name() const {
        switch (kind_) {
        case Kind::FreeAbelian: return size_ == 1 ? "Z" : "Z^" + std::to_string(size_);
        case Kind::Cyclic: return "C" + std::to_string(size_);
        case Kind::FiniteTable: return "table";
        }
        return "?";
    }

    friend bool operator==(const GradingGroup& a, const GradingGroup& b) {
        return a.kind_ == b.kind_ && a.size_ == b.size_ && a.table_ == b.table_;
    }

private:
    GradingGroup() = default;

    Kind kind_ = Kind::FreeAbelian;
    std::size_t size_ = 1;
    std::vector<std::vector<int>> table_;
    int identity_ = 0;
    std::vector<int> inverse_;
};

} // namespace crystal
