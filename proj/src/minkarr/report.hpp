#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "minkarr/scalar.hpp"

namespace minkarr {

using Json = nlohmann::json;

Json scalar_to_json(const Scalar& s);

struct Violation {
    std::string kind;
    long long i = -1;
    long long j = -1;
    long long k = -1;
    Scalar residual = Scalar(0);
    std::string note;

    Json to_json() const;
};

// Machine-checkable pass/fail record for one predicate, inequality family, or
// pipeline stage. `details` carries op-specific data (margins, witnesses,
// counts); `stages` nests the reports of composed pipelines.
class VerificationReport {
public:
    VerificationReport() = default;
    VerificationReport(std::string predicate, const NumericContext& ctx)
        : predicate_(std::move(predicate)),
          numeric_mode_(ctx.mode_name()),
          tolerance_(ctx.tolerance) {}

    const std::string& predicate() const { return predicate_; }
    bool pass() const { return pass_; }
    const std::vector<Violation>& violations() const { return violations_; }
    const std::vector<VerificationReport>& stages() const { return stages_; }

    void fail() { pass_ = false; }
    void add_violation(Violation v) {
        pass_ = false;
        violations_.push_back(std::move(v));
    }
    void add_note(std::string note) { notes_.push_back(std::move(note)); }
    void add_stage(VerificationReport stage) {
        if (!stage.pass_) pass_ = false;
        stages_.push_back(std::move(stage));
    }
    Json& details() { return details_; }
    const Json& details() const { return details_; }

    Json to_json() const;

private:
    std::string predicate_;
    bool pass_ = true;
    std::vector<Violation> violations_;
    std::vector<std::string> notes_;
    std::vector<VerificationReport> stages_;
    std::string numeric_mode_ = "float";
    double tolerance_ = 0.0;
    Json details_ = Json::object();
};

}  // namespace minkarr
