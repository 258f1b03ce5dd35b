#pragma once

#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "grsc/ball.hpp"
#include "grsc/cancellation.hpp"
#include "grsc/diagram.hpp"
#include "grsc/embed.hpp"
#include "grsc/metric.hpp"

namespace grsc {

using Json = nlohmann::ordered_json;

// 64 bit FNV-1a of the raw bytes, 16 hex digits
std::string fnv1a_hex(const std::string& bytes);

Json json_word(const Alphabet& a, const Word& w);
Json json_piece_bound(const Alphabet& a, const PieceBound& b);
Json json_gr16(const Alphabet& a, const Gr16Verdict& v);
Json json_presentation(const Presentation& p);
Json json_certificate(const Alphabet& a, const Certificate& c);
Json json_ball(const Ball& b);
Json json_embedding(const EmbeddedComponent& a, const EmbedCheckReport& r);
Json json_contraction(const ContractionReport& r);
Json json_lambda1(const Lambda1Report& r);
Json json_lambda2(const Lambda2Report& r);
Json json_validation(const ValidationReport& r);

// shared envelope: command echo plus (file name, digest) pairs; callers attach
// their own result fields. Timing never goes in here, reports are byte stable
// for fixed inputs and seed.
Json report_envelope(const std::string& command,
                     const std::vector<std::pair<std::string, std::string>>& inputs);

std::string render_json(const Json& j);
void write_json_file(const std::string& path, const Json& j);

}
