#ifndef HCDC_TRACE_HPP
#define HCDC_TRACE_HPP

#include <ostream>

#include <json.hpp>

namespace hcdc {

// JSONL trace sink. Level 1 records driver rounds, level 2 adds every rule
// firing and branch decision inside the cycle-detection engine.
struct TraceSink {
    std::ostream* out = nullptr;
    int level = 0;

    bool on(int lvl) const { return out != nullptr && level >= lvl; }

    void emit(const nlohmann::json& j) {
        if (out)
            (*out) << j.dump() << '\n';
    }
};

} // namespace hcdc

#endif
