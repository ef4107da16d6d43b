// Exercises the shared library through its C header only.
#include <gtest/gtest.h>

#include <cstring>
#include <string>

#include "crosscap/crosscap.h"

namespace {

std::string take(char* s) {
  std::string out = s ? s : "";
  cc_string_free(s);
  return out;
}

}  // namespace

TEST(CApi, DecideAndVerify) {
  cc_instance* inst = nullptr;
  ASSERT_EQ(cc_instance_from_json(R"({"surface":{"crosscaps":2},"matrix":[[1,0],[2,-1]]})", &inst), CC_OK);
  EXPECT_EQ(cc_instance_crosscaps(inst), 2);
  EXPECT_EQ(cc_instance_punctures(inst), 0);

  cc_decision* d = nullptr;
  ASSERT_EQ(cc_decide(inst, nullptr, &d), CC_OK);
  EXPECT_EQ(cc_decision_realizable(d), 1);
  EXPECT_STREQ(cc_decision_reason(d), "None");
  EXPECT_STREQ(cc_decision_completeness(d), "full-integer");

  cc_certificate* cert = nullptr;
  ASSERT_EQ(cc_decision_certificate(d, &cert), CC_OK);
  ASSERT_NE(cert, nullptr);
  EXPECT_GE(cc_certificate_move_count(cert), 1U);
  int accepted = 0;
  char* reason = nullptr;
  ASSERT_EQ(cc_verify(inst, cert, &accepted, &reason), CC_OK);
  EXPECT_EQ(accepted, 1);
  EXPECT_EQ(reason, nullptr);

  char* json = nullptr;
  ASSERT_EQ(cc_certificate_to_json(cert, 0, &json), CC_OK);
  const std::string text = take(json);
  EXPECT_NE(text.find("\"integer\""), std::string::npos);
  cc_certificate* parsed = nullptr;
  ASSERT_EQ(cc_certificate_from_json(text.c_str(), &parsed), CC_OK);
  ASSERT_EQ(cc_verify(inst, parsed, &accepted, nullptr), CC_OK);
  EXPECT_EQ(accepted, 1);

  ASSERT_EQ(cc_certificate_trace_json(cert, &json), CC_OK);
  EXPECT_NE(take(json).find("\"kernel\""), std::string::npos);
  ASSERT_EQ(cc_decision_to_json(d, 1, &json), CC_OK);
  EXPECT_NE(take(json).find("\"realizable\": true"), std::string::npos);

  cc_certificate_free(parsed);
  cc_certificate_free(cert);
  cc_decision_free(d);
  cc_instance_free(inst);
}

TEST(CApi, Rejection) {
  cc_instance* inst = nullptr;
  ASSERT_EQ(cc_instance_from_json(R"({"surface":{"crosscaps":2},"matrix":[[1,0],[2,-1]]})", &inst), CC_OK);
  cc_certificate* cert = nullptr;
  ASSERT_EQ(cc_certificate_from_json(R"({"level":"integer","moves":[{"type":"crosscap_slide","i":2,"j":1}]})", &cert),
            CC_OK);
  int accepted = 1;
  char* reason = nullptr;
  ASSERT_EQ(cc_verify(inst, cert, &accepted, &reason), CC_OK);
  EXPECT_EQ(accepted, 0);
  EXPECT_NE(take(reason).find("mismatch"), std::string::npos);
  cc_certificate_free(cert);
  cc_instance_free(inst);
}

TEST(CApi, NotRealizable) {
  cc_instance* inst = nullptr;
  ASSERT_EQ(cc_instance_generate(4, 1, 12, 5, 1, 0, &inst), CC_OK);
  cc_decision* d = nullptr;
  ASSERT_EQ(cc_decide(inst, nullptr, &d), CC_OK);
  EXPECT_EQ(cc_decision_realizable(d), 0);
  EXPECT_STREQ(cc_decision_reason(d), "PairingNotPreserved");
  EXPECT_EQ(cc_decision_completeness(d), nullptr);
  cc_certificate* cert = reinterpret_cast<cc_certificate*>(&d);
  ASSERT_EQ(cc_decision_certificate(d, &cert), CC_OK);
  EXPECT_EQ(cert, nullptr);
  cc_decision_free(d);
  cc_instance_free(inst);
}

TEST(CApi, Errors) {
  cc_instance* inst = nullptr;
  EXPECT_EQ(cc_instance_from_json("{", &inst), CC_PARSE_ERROR);
  EXPECT_EQ(inst, nullptr);
  EXPECT_NE(std::strlen(cc_last_error()), 0U);
  EXPECT_TRUE(cc_status_is_input_error(CC_PARSE_ERROR));
  EXPECT_FALSE(cc_status_is_input_error(CC_INTERNAL_ERROR));
  EXPECT_STREQ(cc_status_name(CC_OK), "Ok");

  ASSERT_EQ(cc_instance_from_json(R"({"surface":{"crosscaps":2},"matrix":[[1,1],[0,1]]})", &inst), CC_OK);
  cc_decision* d = nullptr;
  EXPECT_EQ(cc_decide(inst, nullptr, &d), CC_ROW_SUM_VIOLATION);
  EXPECT_EQ(d, nullptr);
  cc_instance_free(inst);

  EXPECT_EQ(cc_instance_generate(2, 0, 5, 1, 1, 0, &inst), CC_INVALID_ARGUMENT);
  EXPECT_EQ(cc_decide(nullptr, nullptr, &d), CC_INVALID_ARGUMENT);
  EXPECT_EQ(cc_verify(nullptr, nullptr, nullptr, nullptr), CC_INVALID_ARGUMENT);
  cc_enumeration* e = nullptr;
  EXPECT_EQ(cc_enumerate(30, &e), CC_RESOURCE_LIMIT);
}

TEST(CApi, Options) {
  cc_instance* inst = nullptr;
  ASSERT_EQ(cc_instance_generate(5, 0, 30, 3, 0, 0, &inst), CC_OK);
  cc_decide_options opt{1, 0};
  cc_decision* d = nullptr;
  EXPECT_EQ(cc_decide(inst, &opt, &d), CC_RESOURCE_LIMIT);
  opt.kernel_move_limit = 0;
  ASSERT_EQ(cc_decide(inst, &opt, &d), CC_OK);
  EXPECT_EQ(cc_decision_realizable(d), 1);
  cc_decision_free(d);
  cc_instance_free(inst);
}

TEST(CApi, Enumerate) {
  cc_enumeration* e = nullptr;
  ASSERT_EQ(cc_enumerate(4, &e), CC_OK);
  EXPECT_EQ(cc_enumeration_order(e), 48U);
  EXPECT_EQ(cc_enumeration_max_length(e), 4);
  const uint64_t hist[] = {1, 7, 17, 17, 6};
  for (int k = 0; k <= 4; ++k) EXPECT_EQ(cc_enumeration_count(e, k), hist[k]);
  EXPECT_EQ(cc_enumeration_count(e, 9), 0U);
  char* json = nullptr;
  ASSERT_EQ(cc_enumeration_to_json(e, &json), CC_OK);
  EXPECT_NE(take(json).find("\"order\": 48"), std::string::npos);
  cc_enumeration_free(e);
}

TEST(CApi, RoundTripInstanceJson) {
  cc_instance* inst = nullptr;
  ASSERT_EQ(cc_instance_generate(3, 2, 20, 44, 0, 1, &inst), CC_OK);
  char* json = nullptr;
  ASSERT_EQ(cc_instance_to_json(inst, &json), CC_OK);
  cc_instance* again = nullptr;
  ASSERT_EQ(cc_instance_from_json(json, &again), CC_OK);
  char* json2 = nullptr;
  ASSERT_EQ(cc_instance_to_json(again, &json2), CC_OK);
  EXPECT_STREQ(json, json2);
  cc_string_free(json);
  cc_string_free(json2);
  cc_instance_free(again);
  cc_instance_free(inst);
}
