// Development aid: dumps per-variety diagnostics (rays, partition, symbolic
// matrix, c2 pairing, double-point polynomial) for every catalog entry.
#include <iostream>

#include "torfano/context.hpp"
#include "torfano/data.hpp"

using namespace torfano;

int main(int argc, char** argv) {
    auto catalog = parse_catalog(data::catalog_text());
    for (const auto& pres : catalog) {
        if (argc > 1 && pres.variety_id != argv[1]) continue;
        try {
            auto ctx = build_context(pres);
            std::cout << "== " << pres.variety_id << " rays=" << pres.ray_count
                      << " euler=" << ctx.validation.euler << " b2=" << ctx.validation.betti2
                      << " b4=" << ctx.validation.betti4 << '\n';
            std::cout << "rays:";
            for (const auto& v : ctx.coords)
                std::cout << " (" << v[0] << ',' << v[1] << ',' << v[2] << ',' << v[3] << ')';
            std::cout << '\n';
            std::cout << "classes:";
            for (const auto& cls : ctx.partition.classes) {
                std::cout << " {";
                for (size_t t = 0; t < cls.size(); ++t) std::cout << (t ? "," : "") << cls[t];
                std::cout << '}';
            }
            std::cout << '\n';
            const int n = ctx.partition.size();
            for (int i = 0; i < n; ++i) {
                std::cout << "lambda row " << i + 1 << ":";
                for (int j = 0; j < n; ++j)
                    std::cout << "  [" << to_string(ctx.lambda[size_t(i)][size_t(j)]) << "]";
                std::cout << '\n';
            }
            std::cout << "c2: " << to_string(ctx.c2) << '\n';
            std::cout << "dbp: " << to_string(ctx.dbp) << "\n\n";
        } catch (const std::exception& e) {
            std::cout << "== " << pres.variety_id << " ERROR: " << e.what() << "\n\n";
        }
    }
    return 0;
}
