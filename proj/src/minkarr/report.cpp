#include "minkarr/report.hpp"

namespace minkarr {

Json scalar_to_json(const Scalar& s) {
    if (s.exact()) return s.rat().str();
    return s.to_double();
}

Json Violation::to_json() const {
    Json j;
    j["i"] = i;
    j["j"] = this->j;
    j["residual"] = scalar_to_json(residual);
    if (k >= 0) j["k"] = k;
    if (!kind.empty()) j["kind"] = kind;
    if (!note.empty()) j["note"] = note;
    return j;
}

Json VerificationReport::to_json() const {
    Json j;
    j["predicate"] = predicate_;
    j["pass"] = pass_;
    j["violations"] = Json::array();
    for (const Violation& v : violations_) j["violations"].push_back(v.to_json());
    j["numeric_mode"] = numeric_mode_;
    j["tolerance"] = tolerance_;
    if (!notes_.empty()) j["notes"] = notes_;
    if (!details_.empty()) j["details"] = details_;
    if (!stages_.empty()) {
        j["stages"] = Json::array();
        for (const VerificationReport& s : stages_) j["stages"].push_back(s.to_json());
    }
    return j;
}

}  // namespace minkarr
