#include "lgcert/budget.hpp"

#include "lgcert/errors.hpp"

namespace lgcert {

void Budget::check(const char* where) const {
    if (expired()) throw BudgetExceeded(std::string("time budget exhausted in ") + where);
}

} // namespace lgcert
