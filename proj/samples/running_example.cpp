// Mines the five-object example table: closed patterns, their generators, and the
// ratio of both to the size of the search space.

#include <iostream>

#include "intpat/intpat.hpp"

using namespace intpat;

namespace {

void print(const IntervalPattern& p) {
    std::cout << "<";
    for (std::size_t i = 0; i < p.size(); ++i) std::cout << (i ? "," : "") << "[" << p[i].lo << "," << p[i].hi << "]";
    std::cout << ">";
}

} // namespace

int main() {
    const auto ds = NumericalDataset::from_rows({{5, 7, 6}, {6, 8, 4}, {4, 8, 5}, {4, 9, 8}, {5, 8, 5}});
    const MinerConfig cfg{.minsup = 2};

    std::cout << "search space: " << search_space_size(ds) << " patterns\n\nclosed (minsup 2):\n";
    for (const auto& r : mine_fcip(ds, cfg)) {
        std::cout << "  ";
        print(r.pattern);
        std::cout << "  support " << r.extent.size() << '\n';
    }

    std::cout << "\ngenerators (minsup 2):\n";
    for (const auto& r : mine_fipg(ds, cfg, StoreKind::Trie)) {
        std::cout << "  ";
        print(r.pattern);
        std::cout << "  closes to ";
        print(r.closure);
        std::cout << '\n';
    }
}
