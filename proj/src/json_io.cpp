#include "decomp/json_io.hpp"

namespace decomp {

using nlohmann::json;

json to_json(const Rational& q) {
    return json{{"num", num_string(q)}, {"den", den_string(q)}};
}

json to_json(const CentralizerProfile& p) {
    return json{{"n", p.order},
                {"centralizer_sizes", p.centralizer_sizes},
                {"class_sizes", p.class_sizes},
                {"R", p.class_count},
                {"center_size", p.center_size}};
}

json to_json(const ThetaResult& r) {
    return json{{"theta", r.theta},
                {"residual", r.residual},
                {"bracket_width", r.bracket_width},
                {"iterations", r.iterations}};
}

json to_json(const ThetaBounds& b) {
    return json{{"lower_center", b.lower_center},
                {"lower_classes", b.lower_classes},
                {"upper", b.upper}};
}

json to_json(const SuenReport& r) {
    return json{{"k", r.k},
                {"delta", r.delta},
                {"delta_star", r.delta_star},
                {"upper", r.upper},
                {"lower", r.lower},
                {"baseline", r.baseline},
                {"single_mean", to_json(r.single)},
                {"pair_mean", to_json(r.pair)}};
}

json to_json(const oracle::ExactDistribution& d) {
    json counts = json::object();
    for (const auto& [value, count] : d.counts)
        counts[std::to_string(value)] = std::to_string(count);
    return json{{"total", std::to_string(d.total)}, {"counts", counts}};
}

}  // namespace decomp
