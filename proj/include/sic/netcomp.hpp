#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace sic {

enum class NodeRole { server, memory, client, relay };

// Undirected unit-hop graph with role-tagged nodes. Weighted edges are
// rejected: the traffic metric is bit x hop.
class Network {
public:
    void add_node(const std::string& id, NodeRole role);
    void add_edge(const std::string& a, const std::string& b);

    bool has_node(const std::string& id) const;
    NodeRole role(const std::string& id) const;
    std::vector<std::string> nodes_with_role(NodeRole r) const;  // sorted by id

    // BFS hop count; throws if either endpoint is unknown or unreachable.
    std::uint32_t shortest_hops(const std::string& a, const std::string& b) const;
    std::vector<std::string> shortest_path(const std::string& a, const std::string& b) const;

private:
    std::size_t index_of(const std::string& id) const;
    std::vector<std::uint32_t> bfs_from(std::size_t start) const;

    std::map<std::string, std::size_t> index_;
    std::vector<std::string> ids_;
    std::vector<NodeRole> roles_;
    std::vector<std::vector<std::size_t>> adj_;
};

struct BitHopReport {
    double bh_ucomp = 0.0;
    double bh_ucomp_ed = 0.0;
    double gain_bh = 0.0;
    std::string chosen_memory;
    std::vector<std::string> path_s_c;
    std::vector<std::string> path_s_m;
    std::vector<std::string> path_m_c;
};

// BH_Ucomp = E{l} * d(S,C)
double bit_hop_ucomp(const Network& net, const std::string& server,
                     const std::string& client, double mean_len_bits);

// BH_UcompED = d(S,M) * E{l}/g + d(M,C) * E{l}: side information is usable
// on the server-to-memory leg only; the memory node re-encodes at the
// plain universal rate for the remaining hops.
double bit_hop_ucomp_ed(const Network& net, const std::string& server,
                        const std::string& memory, const std::string& client,
                        double mean_len_bits, double gain_g);

// memory_choice "auto" scans every memory-role node and keeps the one
// maximizing the bit x hop gain (ties to the lowest node id); otherwise it
// names the node to use.
BitHopReport gain_bh(const Network& net, const std::string& server,
                     const std::string& client, double gain_g,
                     const std::string& memory_choice = "auto",
                     double mean_len_bits = 8192.0);

Network network_from_json_text(const std::string& text);
Network fig5_network();  // the worked example graph: d(S,C)=3, d(S,M)=2, d(M,C)=1

}  // namespace sic
