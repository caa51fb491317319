#include "sic/netcomp.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace sic {

namespace {

constexpr std::uint32_t kUnreached = std::numeric_limits<std::uint32_t>::max();

NodeRole role_from_string(const std::string& s) {
    if (s == "server") return NodeRole::server;
    if (s == "memory") return NodeRole::memory;
    if (s == "client") return NodeRole::client;
    if (s == "relay") return NodeRole::relay;
    throw std::invalid_argument("network: unknown node role '" + s + "'");
}

}  // namespace

void Network::add_node(const std::string& id, NodeRole role) {
    if (index_.count(id)) throw std::invalid_argument("network: duplicate node id '" + id + "'");
    index_[id] = ids_.size();
    ids_.push_back(id);
    roles_.push_back(role);
    adj_.emplace_back();
}

void Network::add_edge(const std::string& a, const std::string& b) {
    const std::size_t ia = index_of(a), ib = index_of(b);
    if (ia == ib) throw std::invalid_argument("network: self-loop on '" + a + "'");
    adj_[ia].push_back(ib);
    adj_[ib].push_back(ia);
}

bool Network::has_node(const std::string& id) const { return index_.count(id) != 0; }

NodeRole Network::role(const std::string& id) const { return roles_[index_of(id)]; }

std::vector<std::string> Network::nodes_with_role(NodeRole r) const {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < ids_.size(); ++i)
        if (roles_[i] == r) out.push_back(ids_[i]);
    std::sort(out.begin(), out.end());
    return out;
}

std::size_t Network::index_of(const std::string& id) const {
    const auto it = index_.find(id);
    if (it == index_.end()) throw std::invalid_argument("network: unknown node '" + id + "'");
    return it->second;
}

std::vector<std::uint32_t> Network::bfs_from(std::size_t start) const {
    std::vector<std::uint32_t> dist(ids_.size(), kUnreached);
    std::deque<std::size_t> queue{start};
    dist[start] = 0;
    while (!queue.empty()) {
        const std::size_t u = queue.front();
        queue.pop_front();
        for (std::size_t v : adj_[u]) {
            if (dist[v] == kUnreached) {
                dist[v] = dist[u] + 1;
                queue.push_back(v);
            }
        }
    }
    return dist;
}

std::uint32_t Network::shortest_hops(const std::string& a, const std::string& b) const {
    const auto dist = bfs_from(index_of(a));
    const std::uint32_t d = dist[index_of(b)];
    if (d == kUnreached)
        throw std::runtime_error("network: nodes '" + a + "' and '" + b + "' are disconnected");
    return d;
}

std::vector<std::string> Network::shortest_path(const std::string& a,
                                                const std::string& b) const {
    const std::size_t ia = index_of(a), ib = index_of(b);
    const auto dist = bfs_from(ia);
    if (dist[ib] == kUnreached)
        throw std::runtime_error("network: nodes '" + a + "' and '" + b + "' are disconnected");
    // walk back choosing the lexicographically smallest predecessor
    std::vector<std::string> rev{ids_[ib]};
    std::size_t cur = ib;
    while (cur != ia) {
        std::size_t best = SIZE_MAX;
        for (std::size_t v : adj_[cur]) {
            if (dist[v] + 1 != dist[cur]) continue;
            if (best == SIZE_MAX || ids_[v] < ids_[best]) best = v;
        }
        cur = best;
        rev.push_back(ids_[cur]);
    }
    std::reverse(rev.begin(), rev.end());
    return rev;
}

double bit_hop_ucomp(const Network& net, const std::string& server,
                     const std::string& client, double mean_len_bits) {
    if (!(mean_len_bits > 0.0))
        throw std::invalid_argument("bit_hop_ucomp: mean length must be positive");
    return mean_len_bits * net.shortest_hops(server, client);
}

double bit_hop_ucomp_ed(const Network& net, const std::string& server,
                        const std::string& memory, const std::string& client,
                        double mean_len_bits, double gain_g) {
    if (!(mean_len_bits > 0.0))
        throw std::invalid_argument("bit_hop_ucomp_ed: mean length must be positive");
    if (!(gain_g >= 1.0)) throw std::invalid_argument("bit_hop_ucomp_ed: gain must be >= 1");
    const double d_sm = net.shortest_hops(server, memory);
    const double d_mc = net.shortest_hops(memory, client);
    return d_sm * mean_len_bits / gain_g + d_mc * mean_len_bits;
}

BitHopReport gain_bh(const Network& net, const std::string& server,
                     const std::string& client, double gain_g,
                     const std::string& memory_choice, double mean_len_bits) {
    std::vector<std::string> candidates;
    if (memory_choice == "auto") {
        candidates = net.nodes_with_role(NodeRole::memory);
        if (candidates.empty())
            throw std::invalid_argument("gain_bh: no memory nodes available for auto placement");
    } else {
        if (!net.has_node(memory_choice))
            throw std::invalid_argument("gain_bh: unknown memory node '" + memory_choice + "'");
        candidates.push_back(memory_choice);
    }
    const double bh_u = bit_hop_ucomp(net, server, client, mean_len_bits);
    BitHopReport best;
    bool have = false;
    for (const auto& mem : candidates) {  // sorted: ties keep the lowest id
        const double bh_ed = bit_hop_ucomp_ed(net, server, mem, client, mean_len_bits, gain_g);
        const double g = bh_u / bh_ed;
        if (!have || g > best.gain_bh) {
            have = true;
            best.bh_ucomp = bh_u;
            best.bh_ucomp_ed = bh_ed;
            best.gain_bh = g;
            best.chosen_memory = mem;
        }
    }
    best.path_s_c = net.shortest_path(server, client);
    best.path_s_m = net.shortest_path(server, best.chosen_memory);
    best.path_m_c = net.shortest_path(best.chosen_memory, client);
    return best;
}

Network network_from_json_text(const std::string& text) {
    const auto j = nlohmann::json::parse(text);
    Network net;
    for (const auto& node : j.at("nodes"))
        net.add_node(node.at("id").get<std::string>(),
                     role_from_string(node.at("role").get<std::string>()));
    for (const auto& edge : j.at("edges")) {
        if (!edge.is_array() || edge.size() != 2)
            throw std::invalid_argument(
                "network: edges must be [a, b] pairs (weighted edges are not supported)");
        net.add_edge(edge.at(0).get<std::string>(), edge.at(1).get<std::string>());
    }
    return net;
}

Network fig5_network() {
    Network net;
    net.add_node("S", NodeRole::server);
    net.add_node("R1", NodeRole::relay);
    net.add_node("R2", NodeRole::relay);
    net.add_node("R3", NodeRole::relay);
    net.add_node("R4", NodeRole::relay);
    net.add_node("M", NodeRole::memory);
    net.add_node("C", NodeRole::client);
    net.add_edge("S", "R1");   // e1
    net.add_edge("S", "R2");   // e2
    net.add_edge("R1", "M");   // e3
    net.add_edge("R2", "R3");  // e4
    net.add_edge("R1", "R3");  // e5
    net.add_edge("R2", "M");   // e6
    net.add_edge("R3", "R4");  // e7
    net.add_edge("R4", "C");   // e8
    net.add_edge("M", "C");    // e9
    net.add_edge("R3", "C");   // e10
    return net;
}

}  // namespace sic
