#include "pfh/parallel.hpp"

#include <cstdlib>
#include <string>

namespace pfh {

namespace {
std::atomic<unsigned> override_count{0};
}

unsigned thread_count()
{
    if (unsigned n = override_count.load())
        return n;
    if (const char* env = std::getenv("PFH_THREADS")) {
        try {
            int n = std::stoi(env);
            if (n >= 1)
                return static_cast<unsigned>(n);
        } catch (const std::exception&) {
        }
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

void set_thread_count(unsigned n)
{
    override_count = n;
}

} // namespace pfh
