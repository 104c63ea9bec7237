#pragma once

// Partitions, Young diagram nodes, residues and p-regularity.
//
// Conventions: row 1 is the top row of the diagram, rows grow downwards and
// columns grow to the right. A node "above" another has a strictly smaller row
// index. Residues are kept canonical in [0, p-1].

#include <algorithm>
#include <charconv>
#include <compare>
#include <cstddef>
#include <functional>
#include <numeric>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"

namespace symmod {

/// A weakly decreasing sequence of positive integers. Trailing zeros are
/// never stored, so equality is equality of the part sequences.
class Partition {
public:
    Partition() = default;

    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] < 1)
                throw error(errc::bad_partition, "parts must be positive");
            if (i > 0 && parts_[i] > parts_[i - 1])
                throw error(errc::bad_partition, "parts must be weakly decreasing");
        }
        size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
    }

    /// Parses "a,b,c"; the empty string is the empty partition.
    static Partition parse(std::string_view text) {
        std::vector<int> parts;
        if (text.empty())
            return Partition();
        std::size_t pos = 0;
        while (pos <= text.size()) {
            auto comma = text.find(',', pos);
            auto token = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
            int value = 0;
            auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
            if (token.empty() || ec != std::errc() || ptr != token.data() + token.size())
                throw error(errc::bad_partition, "cannot parse partition '" + std::string(text) + "'");
            parts.push_back(value);
            if (comma == std::string_view::npos)
                break;
            pos = comma + 1;
        }
        return Partition(std::move(parts));
    }

    std::string to_string() const {
        std::string out;
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i)
                out += ',';
            out += std::to_string(parts_[i]);
        }
        return out;
    }

    /// |lambda|, the sum of the parts.
    int size() const noexcept { return size_; }
    /// Number of nonzero parts.
    int length() const noexcept { return static_cast<int>(parts_.size()); }
    bool empty() const noexcept { return parts_.empty(); }

    /// 1-based part access; rows beyond the length are 0.
    int part(int row) const noexcept {
        return row >= 1 && row <= length() ? parts_[static_cast<std::size_t>(row - 1)] : 0;
    }
    int first() const noexcept { return part(1); }

    std::span<const int> parts() const noexcept { return parts_; }

    /// (lambda_2, lambda_3, ...)
    Partition tail() const {
        if (parts_.empty())
            return {};
        return Partition(std::vector<int>(parts_.begin() + 1, parts_.end()));
    }

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

    friend std::ostream& operator<<(std::ostream& os, const Partition& p) { return os << '(' << p.to_string() << ')'; }

private:
    std::vector<int> parts_;
    int size_ = 0;
};

/// Orders by size first, then lexicographically on parts.
struct graded_less {
    bool operator()(const Partition& a, const Partition& b) const {
        if (a.size() != b.size())
            return a.size() < b.size();
        return a < b;
    }
};

struct partition_hash {
    std::size_t operator()(const Partition& lambda) const noexcept {
        std::size_t h = 0x9e3779b97f4a7c15ULL;
        for (int part : lambda.parts())
            h ^= std::hash<int>{}(part) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return h;
    }
};

/// The characteristic p of the ground field, validated prime.
class PrimeChar {
public:
    explicit PrimeChar(int p) : p_(p) {
        bool prime = p >= 2;
        for (int d = 2; prime && d * d <= p; ++d)
            prime = p % d != 0;
        if (!prime)
            throw error(errc::not_prime, std::to_string(p) + " is not prime");
    }

    int value() const noexcept { return p_; }
    /// 1 when p = 2, otherwise 0.
    int delta() const noexcept { return p_ == 2 ? 1 : 0; }

    friend bool operator==(PrimeChar, PrimeChar) = default;

private:
    int p_;
};

struct Node {
    int row = 1;
    int col = 1;

    friend bool operator==(const Node&, const Node&) = default;
    friend auto operator<=>(const Node&, const Node&) = default;
    friend std::ostream& operator<<(std::ostream& os, const Node& a) { return os << '(' << a.row << ',' << a.col << ')'; }
};

/// An element of Z/pZ stored in [0, p-1].
class ResidueClass {
public:
    ResidueClass(long long value, PrimeChar p) : p_(p.value()) {
        long long r = value % p_;
        value_ = static_cast<int>(r < 0 ? r + p_ : r);
    }

    int value() const noexcept { return value_; }
    int modulus() const noexcept { return p_; }
    ResidueClass operator-() const { return ResidueClass(p_ - value_, PrimeChar(p_)); }

    friend bool operator==(const ResidueClass&, const ResidueClass&) = default;

private:
    int value_;
    int p_;
};

inline ResidueClass residue(Node a, PrimeChar p) { return ResidueClass(a.col - a.row, p); }

inline bool is_p_regular(const Partition& lambda, PrimeChar p) {
    auto parts = lambda.parts();
    int run = 0;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        run = (i > 0 && parts[i] == parts[i - 1]) ? run + 1 : 1;
        if (run >= p.value())
            return false;
    }
    return true;
}

inline void require_regular(const Partition& lambda, PrimeChar p) {
    if (!is_p_regular(lambda, p))
        throw error(errc::not_regular, lambda.to_string() + " is not " + std::to_string(p.value()) + "-regular");
}

inline void require_nonempty(const Partition& lambda) {
    if (lambda.empty())
        throw error(errc::empty_partition, "partition must be nonempty");
}

enum class NodeKind { removable, addable };

struct BoundaryNode {
    Node node;
    NodeKind kind;
    ResidueClass res;

    friend bool operator==(const BoundaryNode&, const BoundaryNode&) = default;
};

inline bool is_removable(const Partition& lambda, Node a) {
    return a.row >= 1 && a.row <= lambda.length() && a.col == lambda.part(a.row) && lambda.part(a.row + 1) < a.col;
}

inline bool is_addable(const Partition& lambda, Node a) {
    if (a.row < 1 || a.row > lambda.length() + 1 || a.col != lambda.part(a.row) + 1)
        return false;
    return a.row == 1 || lambda.part(a.row - 1) >= a.col;
}

/// Removable and addable nodes read along the rim from bottom-left to
/// top-right. The result starts and ends with an addable node.
inline std::vector<BoundaryNode> boundary_nodes(const Partition& lambda, PrimeChar p) {
    std::vector<BoundaryNode> out;
    for (int row = lambda.length() + 1; row >= 1; --row) {
        Node removable{row, lambda.part(row)};
        if (row <= lambda.length() && is_removable(lambda, removable))
            out.push_back({removable, NodeKind::removable, residue(removable, p)});
        Node addable{row, lambda.part(row) + 1};
        if (is_addable(lambda, addable))
            out.push_back({addable, NodeKind::addable, residue(addable, p)});
    }
    return out;
}

inline std::vector<Node> removable_nodes(const Partition& lambda) {
    std::vector<Node> out;
    for (int row = 1; row <= lambda.length(); ++row)
        if (lambda.part(row + 1) < lambda.part(row))
            out.push_back({row, lambda.part(row)});
    return out;
}

inline Partition remove_node(const Partition& lambda, Node a) {
    if (!is_removable(lambda, a))
        throw error(errc::not_removable, "node (" + std::to_string(a.row) + "," + std::to_string(a.col) +
                                             ") is not removable from " + lambda.to_string());
    std::vector<int> parts(lambda.parts().begin(), lambda.parts().end());
    if (--parts[static_cast<std::size_t>(a.row - 1)] == 0)
        parts.pop_back();
    return Partition(std::move(parts));
}

inline Partition add_node(const Partition& lambda, Node b) {
    if (!is_addable(lambda, b))
        throw error(errc::not_addable, "node (" + std::to_string(b.row) + "," + std::to_string(b.col) +
                                           ") is not addable to " + lambda.to_string());
    std::vector<int> parts(lambda.parts().begin(), lambda.parts().end());
    if (b.row > lambda.length())
        parts.push_back(1);
    else
        ++parts[static_cast<std::size_t>(b.row - 1)];
    return Partition(std::move(parts));
}

/// (n - |mu|, mu_1, mu_2, ...), defined when n - |mu| >= mu_1.
inline Partition attach(int n, const Partition& mu) {
    int first = n - mu.size();
    if (first < mu.first())
        throw error(errc::first_part_too_small,
                    "n - |mu| = " + std::to_string(first) + " < mu_1 = " + std::to_string(mu.first()));
    if (first == 0)
        return {};
    std::vector<int> parts{first};
    parts.insert(parts.end(), mu.parts().begin(), mu.parts().end());
    return Partition(std::move(parts));
}

/// All partitions of n, parts in lexicographically increasing order.
inline std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    std::vector<int> current;
    std::function<void(int, int)> rec = [&](int remaining, int max_part) {
        if (remaining == 0) {
            out.emplace_back(current);
            return;
        }
        for (int part = 1; part <= std::min(remaining, max_part); ++part) {
            current.push_back(part);
            rec(remaining - part, part);
            current.pop_back();
        }
    };
    rec(n, n);
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<Partition> regular_partitions_of(int n, PrimeChar p) {
    auto all = partitions_of(n);
    std::erase_if(all, [p](const Partition& lambda) { return !is_p_regular(lambda, p); });
    return all;
}

} // namespace symmod
