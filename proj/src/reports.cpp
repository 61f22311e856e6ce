#include "cliffpoint/reports.hpp"

namespace cliffpoint {

std::string json_real(const BigReal& v) {
    return v.to_decimal(v.digits() < 32 ? v.digits() : 32);
}

std::string json_int(const BigInt& z) {
    return z.get_str();
}

Json to_json(const CrossingResult& r) {
    return Json{
        {"index", json_int(r.index)},
        {"sum_estimate", json_real(r.sum_estimate)},
        {"remainder_bound", json_real(r.remainder_bound)},
        {"margin", json_real(r.margin)},
        {"next_term", json_real(r.next_term)},
        {"checks",
         {{"estimate_below", r.checks[0]},
          {"next_term_crosses", r.checks[1]},
          {"bound_below_next_term", r.checks[2]},
          {"margin_exceeds_bound", r.checks[3]}}},
        {"initial_terms", r.initial_terms},
        {"order", r.order},
        {"digits", r.digits_used},
    };
}

Json to_json(const IdentityReport& r) {
    Json j{
        {"condition_holds", r.condition_holds},
        {"sum_of_terms", json_real(r.sum_of_terms)},
        {"lhs", json_real(r.lhs)},
        {"rhs", json_real(r.rhs)},
        {"difference", json_real(r.difference)},
        {"digits", r.digits_used},
    };
    if (r.method_agreement)
        j["method_agreement"] = json_real(*r.method_agreement);
    else
        j["method_agreement"] = nullptr;
    return j;
}

Json to_json(const MertensEstimate& r) {
    return Json{
        {"q", r.ap.modulus},
        {"a", r.ap.residue},
        {"x", r.x},
        {"value", json_real(r.value)},
        {"recip_sum", json_real(r.recip_sum)},
        {"phi_q", r.phi_q},
        {"note", "empirical estimate; the o(1) term is dropped"},
    };
}

Json to_json(const CutoffEstimate& r) {
    return Json{
        {"q", r.ap.modulus},
        {"a", r.ap.residue},
        {"mqa_used", json_real(r.mqa_used)},
        {"loglog_x", json_real(r.loglog_x)},
        {"log_x", json_real(r.log_x)},
        {"log10_x", json_real(r.log10_x)},
        {"x_leading", json_real(r.x_leading)},
        {"x_exponent", json_int(r.x_exponent)},
        {"log10_N0", json_real(r.log10_N0)},
        {"N0_leading", json_real(r.N0_leading)},
        {"N0_exponent", json_int(r.N0_exponent)},
        {"digits", r.digits_used},
    };
}

Json to_json(const TowerReal& t) {
    return Json{
        {"height", t.height()},
        {"top", json_real(t.top())},
        {"form", t.describe()},
    };
}

Json to_json(const SkewesReport& r) {
    return Json{
        {"s2", to_json(r.s2)},
        {"n0", to_json(r.n0)},
        {"s2_level5_top", json_real(r.s2_level5_top)},
        {"n0_level5_top", json_real(r.n0_level5_top)},
        {"top_ratio", json_real(r.top_ratio)},
        {"log3_P", json_real(r.log3_P)},
        {"ln3_S2", json_real(r.ln3_S2)},
        {"loglog_S2", json_real(r.loglog_S2)},
        {"n0_exceeds_s2", r.n0_exceeds_s2},
    };
}

Json to_json(const Section8Report& r) {
    return Json{
        {"q", to_json(r.q)},
        {"n0", to_json(r.n0)},
        {"log10_ln3_N0", json_real(r.log10_ln3_N0)},
        {"ln5_N0", json_real(r.ln5_N0)},
        {"ln5_N0_lower", json_real(r.ln5_N0_lower)},
        {"e_to_e", json_real(r.e_to_e)},
        {"log10_phi_gap", json_real(r.log10_phi_gap)},
        {"tower_form", r.tower_form},
        {"bound_chain_holds", r.bound_chain_holds},
    };
}

Json to_json(const LemmasReport& r) {
    return Json{
        {"crossover", json_real(r.crossover)},
        {"grid_i", r.grid_i},
        {"grid_ii", r.grid_ii},
        {"grid_iii", r.grid_iii},
        {"lemma_i", r.lemma_i},
        {"lemma_ii", r.lemma_ii},
        {"lemma_iii", r.lemma_iii},
    };
}

Json report_envelope(const std::string& command, Json inputs, Json outputs, int precision_digits,
                     bool rigorous) {
    return Json{
        {"command", command},
        {"inputs", std::move(inputs)},
        {"outputs", std::move(outputs)},
        {"precision_digits", precision_digits},
        {"rigorous", rigorous},
    };
}

} // namespace cliffpoint
