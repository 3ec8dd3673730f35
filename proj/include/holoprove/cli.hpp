#pragma once

#include "holoprove/file_formats.hpp"
#include "holoprove/sequence.hpp"

#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace holoprove {

enum ExitCode : int {
    kExitOk = 0,
    kExitVerificationFailed = 1,
    kExitInputError = 2,
    kExitSearchExhausted = 3,
};

struct VerifySection {
    std::string name;
    bool ok = false;
    std::string detail;
};

struct VerifyOptions {
    std::size_t terms = 251;
    std::optional<std::vector<BFileEntry>> bfile;
    std::optional<PRecurrence> extra_recurrence;
};

struct VerifyReport {
    std::vector<VerifySection> sections;  // fixed order
    std::vector<Rational> terms;          // Newton-lifted a(0..terms-1)
    bool all_ok() const;
};

/// Runs every check of `holoprove verify` on a full certificate.
VerifyReport verify_certificate_file(const CertificateFile& file, const VerifyOptions& options);

/// Entry point behind the `holoprove` executable. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace holoprove
