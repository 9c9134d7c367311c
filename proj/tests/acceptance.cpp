#include <iostream>
#include <thread>

#include "audit.hpp"
#include "fzmm/error.hpp"

int main(int argc, char** argv) {
  fzmm::audit::AuditOptions options;
  options.data_dir = argc > 1 ? argv[1] : FZMM_DATA_DIR;
  options.workers = std::max(1u, std::thread::hardware_concurrency());
  try {
    const auto results = fzmm::audit::run_all(options, &std::cout);
    int failed = 0;
    for (const auto& r : results) failed += !r.passed;
    std::cout << (results.size() - failed) << " of " << results.size() << " criteria passed\n";
    return failed == 0 ? 0 : 1;
  } catch (const fzmm::Error& e) {
    std::cerr << e.what() << '\n';
    return 2;
  }
}
