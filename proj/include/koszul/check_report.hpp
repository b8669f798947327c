#pragma once

#include <cstddef>
#include <string>

namespace koszul {

struct CheckReport {
    bool pass = true;
    std::size_t cases = 0;
    std::string witness;

    void fail(std::string w) {
        if (pass) witness = std::move(w);
        pass = false;
    }
};

}
