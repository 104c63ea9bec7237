#pragma once

// i-signatures, normal and good nodes, the crystal operators e~_i and f~_i,
// Jantzen-Seitz detection and one-step restriction composition factors.

#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "partition.hpp"

namespace symmod {

enum class Sign { plus, minus };

struct SignedNode {
    Node node;
    Sign sign;

    friend bool operator==(const SignedNode&, const SignedNode&) = default;
};

inline std::string signs_to_string(const std::vector<SignedNode>& seq) {
    std::string out;
    for (const auto& s : seq)
        out += s.sign == Sign::plus ? '+' : '-';
    return out;
}

struct NormalNodeReport {
    ResidueClass residue;
    std::vector<SignedNode> signature;
    std::vector<SignedNode> reduced;
    std::vector<Node> normal_nodes;
    std::optional<Node> good_node;
    std::optional<Node> cogood_node;
    int epsilon = 0;
};

/// Erases adjacent "-+" pairs until none remain, with one stack pass. The
/// survivors always read +...+-...-.
inline std::vector<SignedNode> reduce_signature(const std::vector<SignedNode>& signature) {
    std::vector<SignedNode> stack;
    for (const auto& s : signature) {
        if (s.sign == Sign::plus && !stack.empty() && stack.back().sign == Sign::minus)
            stack.pop_back();
        else
            stack.push_back(s);
    }
    return stack;
}

inline NormalNodeReport normal_report(const Partition& lambda, ResidueClass i, PrimeChar p) {
    require_regular(lambda, p);
    NormalNodeReport report{i, {}, {}, {}, std::nullopt, std::nullopt, 0};
    for (const auto& b : boundary_nodes(lambda, p))
        if (b.res == i)
            report.signature.push_back({b.node, b.kind == NodeKind::addable ? Sign::plus : Sign::minus});
    report.reduced = reduce_signature(report.signature);
    for (const auto& s : report.reduced) {
        if (s.sign == Sign::minus)
            report.normal_nodes.push_back(s.node);
        else
            report.cogood_node = s.node;
    }
    report.epsilon = static_cast<int>(report.normal_nodes.size());
    if (!report.normal_nodes.empty())
        report.good_node = report.normal_nodes.front();
    return report;
}

inline int epsilon(const Partition& lambda, ResidueClass i, PrimeChar p) { return normal_report(lambda, i, p).epsilon; }

inline std::optional<Partition> e_tilde(const Partition& lambda, ResidueClass i, PrimeChar p) {
    auto report = normal_report(lambda, i, p);
    if (!report.good_node)
        return std::nullopt;
    auto mu = remove_node(lambda, *report.good_node);
    if (!is_p_regular(mu, p))
        throw std::logic_error("removing a good node broke p-regularity of " + lambda.to_string());
    return mu;
}

inline std::optional<Partition> f_tilde(const Partition& lambda, ResidueClass i, PrimeChar p) {
    auto report = normal_report(lambda, i, p);
    if (!report.cogood_node)
        return std::nullopt;
    return add_node(lambda, *report.cogood_node);
}

/// All normal nodes of lambda over every residue, top row first.
inline std::vector<Node> normal_nodes(const Partition& lambda, PrimeChar p) {
    std::vector<Node> out;
    for (int i = 0; i < p.value(); ++i) {
        auto report = normal_report(lambda, ResidueClass(i, p), p);
        out.insert(out.end(), report.normal_nodes.begin(), report.normal_nodes.end());
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// The removable node in the highest row.
inline Node top_removable_node(const Partition& lambda) {
    require_nonempty(lambda);
    return removable_nodes(lambda).front();
}

/// True when the top removable node is the only normal node.
inline bool is_js(const Partition& lambda, PrimeChar p) {
    require_nonempty(lambda);
    auto normals = normal_nodes(lambda, p);
    return normals.size() == 1 && normals.front() == top_removable_node(lambda);
}

struct RestrictionFactors {
    /// Sorted by partition; multiplicities are positive.
    std::vector<std::pair<Partition, int>> entries;

    int total_multiplicity() const {
        int total = 0;
        for (const auto& [mu, mult] : entries)
            total += mult;
        return total;
    }
};

/// Composition factors D^{lambda_A} of the restriction to S_{n-1} contributed
/// by normal nodes A with lambda_A p-regular. The multiplicity is one more than
/// the number of normal nodes of the same residue above A.
inline RestrictionFactors restriction_factors(const Partition& lambda, PrimeChar p) {
    require_regular(lambda, p);
    require_nonempty(lambda);
    std::map<Partition, int> acc;
    for (int i = 0; i < p.value(); ++i) {
        auto report = normal_report(lambda, ResidueClass(i, p), p);
        for (const auto& a : report.normal_nodes) {
            auto mu = remove_node(lambda, a);
            if (!is_p_regular(mu, p))
                continue;
            int above = 0;
            for (const auto& b : report.normal_nodes)
                above += b.row < a.row ? 1 : 0;
            acc[mu] += 1 + above;
        }
    }
    return {std::vector<std::pair<Partition, int>>(acc.begin(), acc.end())};
}

struct CrystalEdge {
    std::size_t from;
    std::size_t to;
    int label;

    friend bool operator==(const CrystalEdge&, const CrystalEdge&) = default;
};

/// p-regular partitions of size <= n with e~_i edges.
struct CrystalGraph {
    int p = 2;
    std::vector<Partition> vertices;
    std::vector<CrystalEdge> edges;

    /// Graphviz digraph; vertex ids are the partition strings, edges carry
    /// the residue as label. The empty partition is written as "()".
    std::string to_dot() const {
        auto name = [](const Partition& v) { return v.empty() ? std::string("()") : v.to_string(); };
        std::ostringstream os;
        os << "digraph crystal_p" << p << " {\n";
        for (const auto& v : vertices)
            os << "  \"" << name(v) << "\";\n";
        for (const auto& e : edges)
            os << "  \"" << name(vertices[e.from]) << "\" -> \"" << name(vertices[e.to]) << "\" [label=\"" << e.label
               << "\"];\n";
        os << "}\n";
        return os.str();
    }

    /// {"p": p, "vertices": [...], "edges": [{"from": "5,1", "to": "4,1", "residue": 1}, ...]}
    nlohmann::ordered_json to_json() const {
        nlohmann::ordered_json j;
        j["p"] = p;
        j["vertices"] = nlohmann::ordered_json::array();
        for (const auto& v : vertices)
            j["vertices"].push_back(v.to_string());
        j["edges"] = nlohmann::ordered_json::array();
        for (const auto& e : edges)
            j["edges"].push_back(
                {{"from", vertices[e.from].to_string()}, {"to", vertices[e.to].to_string()}, {"residue", e.label}});
        return j;
    }
};

inline CrystalGraph crystal_graph(int n, PrimeChar p) {
    CrystalGraph g;
    g.p = p.value();
    for (int m = 0; m <= n; ++m) {
        auto level = regular_partitions_of(m, p);
        g.vertices.insert(g.vertices.end(), level.begin(), level.end());
    }
    std::map<Partition, std::size_t> index;
    for (std::size_t k = 0; k < g.vertices.size(); ++k)
        index.emplace(g.vertices[k], k);
    for (std::size_t k = 0; k < g.vertices.size(); ++k) {
        for (int i = 0; i < p.value(); ++i) {
            if (auto mu = e_tilde(g.vertices[k], ResidueClass(i, p), p))
                g.edges.push_back({k, index.at(*mu), i});
        }
    }
    return g;
}

} // namespace symmod
