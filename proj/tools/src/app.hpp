#pragma once

namespace addtrans::cli {

/// Entry point behind main(). Exit codes: 0 success (and all asserted
/// identities hold), 1 an asserted identity failed, 2 usage error,
/// 3 I/O error.
int run_app(int argc, const char* const* argv);

}  // namespace addtrans::cli
