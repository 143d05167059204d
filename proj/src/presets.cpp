#include <algorithm>
#include "z2z4/presets.hpp"

#include <fstream>
#include <stdexcept>

namespace z2z4 {

Z2Z4Code example3_code() {
    return Z2Z4Code(0, 4, {MixedVector({}, {3, 2, 1, 0}), MixedVector({}, {2, 3, 0, 1})});
}

PDSet example3_pd_set() {
    Permutation theta = parse_cycles("(1,3,5,7)(2,4,6,8)", 8);
    return PDSet{{Permutation(8), theta, compose(theta, theta)}, {5, 6, 7, 8}, 1};
}

Z2Z4Code example4_code() {
    return Z2Z4Code(0, 8,
                    {MixedVector({}, {2, 2, 2, 0, 0, 2, 0, 0}),
                     MixedVector({}, {3, 2, 1, 2, 3, 0, 1, 0}),
                     MixedVector({}, {2, 3, 0, 3, 2, 1, 0, 1})});
}

PDSet example4_pd_set() {
    std::vector<Permutation> gens = {
        parse_cycles("(1,5)(2,6)(3,11)(4,12)(9,13)(10,14)(7,15)(8,16)", 16),
        parse_cycles("(1,3,5,11)(2,4,6,12)(9,7,13,15)(10,8,14,16)", 16),
        parse_cycles("(1,9)(2,10)(5,13)(6,14)", 16),
    };
    // Identity and the generators lead the scan order, the rest of the
    // closure follows.
    std::vector<Permutation> perms{Permutation(16)};
    perms.insert(perms.end(), gens.begin(), gens.end());
    for (const auto& p : generate_group(gens))
        if (std::find(perms.begin(), perms.end(), p) == perms.end()) perms.push_back(p);
    return PDSet{std::move(perms), {11, 13, 14, 15, 16}, 3};
}

Z2Z4Code load_code(const std::string& name_or_path) {
    if (name_or_path == "example3") return example3_code();
    if (name_or_path == "example4") return example4_code();
    std::ifstream in(name_or_path);
    if (!in) throw std::runtime_error("cannot open code file: " + name_or_path);
    return parse_code(in);
}

PDSet load_pd_set(const std::string& name_or_path, std::size_t n) {
    if (name_or_path == "example3") return example3_pd_set();
    if (name_or_path == "example4") return example4_pd_set();
    std::ifstream in(name_or_path);
    if (!in) throw std::runtime_error("cannot open pd-set file: " + name_or_path);
    return parse_pd_set(in, n);
}

}  // namespace z2z4
