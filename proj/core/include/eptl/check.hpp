#pragma once

#include <string>

namespace eptl {

struct CheckReport {
    bool ok = true;
    std::string detail;

    void fail(const std::string& what) {
        if (ok) detail = what;
        ok = false;
    }
};

}  // namespace eptl
