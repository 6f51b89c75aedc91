#include "nilpoly/json_io.hpp"

namespace nilpoly {

json int_to_json(const Int& n) {
    if (fits_long(n)) return static_cast<std::int64_t>(n.get_si());
    return to_string(n);
}

json ints_to_json(const std::vector<Int>& v) {
    json arr = json::array();
    for (const Int& n : v) arr.push_back(int_to_json(n));
    return arr;
}

json to_json(const OrbitReport& rep) {
    json status;
    if (const auto* nil = std::get_if<Nilpotent>(&rep.status)) {
        status = {{"kind", "nilpotent"}, {"index", int_to_json(nil->index)}};
    } else if (const auto* per = std::get_if<EventuallyPeriodic>(&rep.status)) {
        status = {{"kind", "periodic"},
                  {"preperiod", per->preperiod},
                  {"cycle", ints_to_json(per->cycle)}};
    } else {
        const auto& div = std::get<Divergent>(rep.status);
        status = {{"kind", "divergent"},
                  {"escape_step", div.escape_step},
                  {"bound", int_to_json(div.bound)}};
    }
    return {{"start", int_to_json(rep.start)},
            {"values", ints_to_json(rep.values)},
            {"differences", ints_to_json(rep.differences)},
            {"status", status}};
}

json to_json(const SequenceFamily& f) {
    return {{"sequence", ints_to_json(f.sequence)},
            {"interpolant", ints_to_json(f.interpolant.coeffs())},
            {"modulus", ints_to_json(f.modulus.coeffs())}};
}

json to_json(const EnumerationResult& r) {
    json sequences = json::array();
    for (const auto& seq : r.sequences) sequences.push_back(ints_to_json(seq));
    json out = {{"start", int_to_json(r.start)},
                {"sequences", sequences},
                {"max_index_found", r.max_index_found},
                {"nodes_explored", r.nodes_explored}};
    if (!r.families.empty()) {
        json families = json::array();
        for (const auto& f : r.families) families.push_back(to_json(f));
        out["families"] = families;
    }
    return out;
}

json to_json(const BoundedForm& f) {
    json out = {{"form", f.form}, {"S", int_to_json(f.S)}};
    if (f.R) out["R"] = int_to_json(*f.R);
    if (f.eps) out["eps"] = *f.eps;
    return out;
}

json to_json(const ScanReport& r) {
    json forms;
    for (std::size_t i = 0; i < r.form_counts.size(); ++i)
        forms[std::to_string(i + 1)] = r.form_counts[i];
    json counterexamples = json::array();
    for (const auto& ce : r.counterexamples)
        counterexamples.push_back({{"poly", format_poly(ce.poly)},
                                   {"r", int_to_json(ce.r)},
                                   {"preperiod", ints_to_json(ce.orbit.preperiod)},
                                   {"cycle", ints_to_json(ce.orbit.cycle)}});
    return {{"total", r.total},
            {"bounded", r.bounded},
            {"unbounded", r.unbounded},
            {"forms", forms},
            {"counterexamples", counterexamples}};
}

} // namespace nilpoly
