#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace burnside::cli {

enum Exit { kOk = 0, kInvalid = 1, kFailed = 2 };

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct VerifyAllOptions {
  std::vector<std::string> groups{"C2", "C3", "C4", "C2xC2", "S3", "D4", "Q8"};
  std::vector<std::string> functors{"trivial", "slice", "conormal"};
  std::vector<std::string> primes{"2", "3", "inf"};
  int cap_rank = 20;
  int cap_order = 5040;
  unsigned jobs = 0;  // 0: hardware concurrency
  std::string output = "text";
};

// Deterministic report; returns kOk or kFailed.
int verify_all(const VerifyAllOptions& options, std::ostream& out);

}  // namespace burnside::cli
