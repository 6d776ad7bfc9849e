// Built with INTPROB_MUTATE_BETA: beta is skewed by 1%, and the verify pipeline must notice.

#include <sstream>

#include <gtest/gtest.h>

#include "intprob/cli.hpp"

using namespace intprob;

TEST(Mutation, VerifyFlagsSkewedBeta)
{
    std::ostringstream out, err;
    EXPECT_EQ(cli::cmd_verify(42, 100, 4, out, err), cli::verification_failure);
    std::istringstream lines(out.str());
    std::string line;
    std::size_t failed = 0;
    while (std::getline(lines, line))
        failed += !json::parse(line)["pass"].get<bool>();
    // Far more than the single known-bad report.
    EXPECT_GT(failed, 5u);
}

TEST(Mutation, BinaryFramesAlsoCaught)
{
    std::ostringstream out, err;
    EXPECT_EQ(cli::cmd_verify(1, 10, 2, out, err), cli::verification_failure);
}
