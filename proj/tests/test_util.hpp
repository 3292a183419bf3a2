#pragma once

#include <gtest/gtest.h>

#include "fixtures.hpp"

namespace osov::test {

inline void expect_all_pass(const std::vector<CheckResult>& res) {
    ASSERT_FALSE(res.empty());
    for (const CheckResult& c : res)
        EXPECT_TRUE(c.pass) << c.suite << "/" << c.name << " residual " << c.residual << " tol " << c.tolerance;
}

}  // namespace osov::test
