#pragma once

#include <string>
#include <vector>

namespace dycknet::testing {

// Reference hidden-state tables for the 8-node Dyck recognizer at n = 2,
// k = 5. Each entry pins the value to the significant figures it shows;
// every entry was cross-checked by evaluating the construction at 256 and
// 512 bits. h4 and h8 are exact gate products, so "1.0"/"0.0" entries must
// hold exactly.

struct GoldenGruTrace {
    std::string word;
    std::vector<std::vector<std::string>> h; // rows t = 0..m, 8 entries each
    std::string output;
    bool accepted;
};

inline const std::vector<GoldenGruTrace>& dyck2_k5_traces() {
    static const std::vector<GoldenGruTrace> traces{
        {"(2 (1 )1 (1 (2 )2 )1 )2",
         {
             {"2.4e-02", "1.0", "1.0", "1.0", "2.4e-02", "1.0", "1.0", "1.0"},
             {"2.58e-04", "3.20e-04", "3.20e-04", "1.0", "1.3e-04", "3.20e-04", "3.20e-04", "1.0"},
             {"5.74e-08", "1.02e-07", "1.02e-07", "1.0", "9.02e-08", "1.02e-07", "1.02e-07", "1.0"},
             {"2.64e-11", "3.28e-11", "3.28e-11", "1.0", "1.33e-11", "3.28e-11", "3.28e-11", "1.0"},
             {"5.88e-15", "1.05e-14", "1.05e-14", "1.0", "9.24e-15", "1.05e-14", "1.05e-14", "1.0"},
             {"3.06e-18", "3.36e-18", "3.36e-18", "1.0", "1.93e-18", "3.36e-18", "3.36e-18", "1.0"},
             {"6.02e-22", "1.07e-21", "1.07e-21", "1.0", "9.46e-22", "1.07e-21", "1.07e-21", "1.0"},
             {"2.77e-25", "3.44e-25", "3.44e-25", "1.0", "1.39e-25", "3.44e-25", "3.44e-25", "1.0"},
             {"2.64e-30", "1.1e-28", "1.1e-28", "1.0", "2.64e-30", "1.1e-28", "1.1e-28", "1.0"},
         },
         "0.024",
         true},
        {"(1 )1 (2 (1 )1",
         {
             {"2.4e-02", "1.0", "1.0", "1.0", "2.4e-02", "1.0", "1.0", "1.0"},
             {"1.30e-04", "3.20e-04", "3.2e-04", "1.0", "2.58e-04", "3.20e-04", "3.20e-04", "1.0"},
             {"2.46e-09", "1.02e-07", "1.02e-07", "1.0", "2.46e-09", "1.02e-07", "1.02e-07", "1.0"},
             {"2.64e-11", "3.28e-11", "3.28e-11", "1.0", "1.33e-11", "3.28e-11", "3.28e-11", "1.0"},
             {"5.88e-15", "1.05e-14", "1.05e-14", "1.0", "9.24e-15", "1.05e-14", "1.05e-14", "1.0"},
             {"2.70e-18", "3.36e-18", "3.36e-18", "1.0", "1.36e-18", "3.36e-18", "3.36e-18", "1.0"},
         },
         "0.805",
         false},
        {"(2 )1 (1 )2 )2",
         {
             {"2.4e-02", "1.0", "1.0", "1.0", "2.4e-02", "1.0", "1.0", "1.0"},
             {"2.58e-04", "3.20e-04", "3.20e-04", "1.0", "1.30e-04", "3.20e-04", "3.20e-04", "1.0"},
             {"2.07e-07", "1.02e-07", "1.02e-07", "1.0", "-2.02e-07", "1.02e-07", "1.02e-07", "1.0"},
             {"2.64e-11", "3.28e-11", "3.28e-11", "1.0", "1.33e-11", "3.28e-11", "3.28e-11", "0.0"},
             {"2.52e-16", "1.05e-14", "1.05e-14", "1.0", "2.52e-16", "1.05e-14", "1.05e-14", "0.0"},
             {"-1.30e-17", "3.36e-18", "3.36e-18", "1.0", "-6.31e-18", "3.36e-18", "3.36e-18", "0.0"},
         },
         "4.88",
         false},
    };
    return traces;
}

} // namespace dycknet::testing
