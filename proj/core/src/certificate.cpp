#include "scs/certificate.hpp"

#include <algorithm>

#include "scs/structure.hpp"

namespace scs {

bool verify_certificate(const Graph &g, const CutsetCertificate &c) {
	int n = g.num_vertices();
	if(c.side_a.empty() || c.side_b.empty())
		return false;
	std::vector<int> side(n, -1);
	auto place = [&](const VertexSet &s, int tag) {
		if(!std::is_sorted(s.begin(), s.end()))
			return false;
		for(Vertex v : s) {
			if(v < 0 || v >= n || side[v] != -1)
				return false;
			side[v] = tag;
		}
		return true;
	};
	if(!place(c.cutset, 0) || !place(c.side_a, 1) || !place(c.side_b, 2))
		return false;
	if(std::find(side.begin(), side.end(), -1) != side.end())
		return false;
	for(auto [u, v] : g.edges()) {
		if(side[u] == 0 && side[v] == 0)
			return false;
		if(side[u] + side[v] == 3 && side[u] != 0 && side[v] != 0)
			return false;
	}
	return true;
}

std::optional<CutsetCertificate> certificate_for_cutset(const Graph &g, std::span<const Vertex> s) {
	if(!is_stable(g, s))
		return std::nullopt;
	auto comps = components_without(g, s);
	if(comps.size() < 2)
		return std::nullopt;
	CutsetCertificate cert;
	cert.cutset.assign(s.begin(), s.end());
	cert.side_a = comps.front();
	for(std::size_t i = 1; i < comps.size(); ++i)
		cert.side_b.insert(cert.side_b.end(), comps[i].begin(), comps[i].end());
	std::sort(cert.side_b.begin(), cert.side_b.end());
	return cert;
}

} // namespace scs
