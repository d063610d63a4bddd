#include "chromasym/kernels.hpp"

namespace chromasym::kernels {

#if defined(__x86_64__) || defined(_M_X64)
const Ops& avx2_ops();  // kernels_avx2.cpp
#endif

bool cpu_has_avx2() {
#if defined(__x86_64__) || defined(_M_X64)
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

namespace {

struct Selection {
    const Ops* ops;
    Backend backend;
};

Selection& selection() {
    static Selection sel = [] {
#if defined(__x86_64__) || defined(_M_X64)
        if (cpu_has_avx2()) return Selection{&avx2_ops(), Backend::Avx2};
#endif
        return Selection{&scalar_ops(), Backend::Scalar};
    }();
    return sel;
}

}  // namespace

const Ops& active() { return *selection().ops; }

Backend active_backend() { return selection().backend; }

bool select(Backend b) {
    switch (b) {
        case Backend::Scalar:
            selection() = {&scalar_ops(), Backend::Scalar};
            return true;
        case Backend::Avx2:
#if defined(__x86_64__) || defined(_M_X64)
            if (cpu_has_avx2()) {
                selection() = {&avx2_ops(), Backend::Avx2};
                return true;
            }
#endif
            return false;
    }
    return false;
}

std::string backend_name(Backend b) {
    return b == Backend::Avx2 ? "avx2" : "scalar";
}

}  // namespace chromasym::kernels
