#pragma once

namespace quatgeo {

// Full command-line front end; returns the process exit code.
// 0 = ok, 1 = parse/usage error, 2 = mathematical finding (freeness
// violation, unrecognized group), 3 = resource cap exceeded.
int run_cli(int argc, const char* const* argv);

}  // namespace quatgeo
