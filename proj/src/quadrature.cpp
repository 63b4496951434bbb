#include "gwave/quadrature.hpp"

#include <gsl/gsl_errno.h>
#include <gsl/gsl_integration.h>

#include <memory>
#include <stdexcept>

namespace gwave {

namespace {

double trampoline(double x, void* params) {
    return (*static_cast<const std::function<double(double)>*>(params))(x);
}

struct WorkspaceDeleter {
    void operator()(gsl_integration_workspace* w) const { gsl_integration_workspace_free(w); }
};

const bool g_handler_off = [] {
    gsl_set_error_handler_off();
    return true;
}();

}  // namespace

QuadratureResult integrate_err(const std::function<double(double)>& f, double a, double b,
                               double abs_tol) {
    (void)g_handler_off;
    constexpr std::size_t kLimit = 4000;
    std::unique_ptr<gsl_integration_workspace, WorkspaceDeleter> ws(
        gsl_integration_workspace_alloc(kLimit));
    if (!ws) throw std::runtime_error("integrate: workspace allocation failed");

    gsl_function gf;
    gf.function = &trampoline;
    gf.params = const_cast<std::function<double(double)>*>(&f);

    QuadratureResult r{};
    const int status = gsl_integration_qag(&gf, a, b, abs_tol, 1e-13, kLimit,
                                           GSL_INTEG_GAUSS21, ws.get(), &r.value, &r.abs_error);
    // EROUND means the requested tolerance is below what roundoff permits;
    // the returned estimate is still the best achievable one.
    if (status != GSL_SUCCESS && status != GSL_EROUND)
        throw std::runtime_error(std::string("integrate: GSL QAG failed: ") +
                                 gsl_strerror(status));
    return r;
}

double integrate(const std::function<double(double)>& f, double a, double b, double abs_tol) {
    return integrate_err(f, a, b, abs_tol).value;
}

}  // namespace gwave
