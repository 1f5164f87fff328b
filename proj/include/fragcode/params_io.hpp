#pragma once
#include <string>

#include "fragcode/codec2d.hpp"
#include "fragcode/codec3d.hpp"
#include "fragcode/robust.hpp"

namespace fragcode {

// Flat "key value" line documents. Readers re-derive every parameter from the
// stored inputs (q, n, M, h, delta) and reject documents whose stored derived
// fields disagree.
std::string params_to_kv(const CodeParams2D& p);
std::string params_to_kv(const CodeParams3D& p);
std::string params_to_kv(const RobustParams& p);

enum class ParamsKind { TwoD, ThreeD, Robust };
ParamsKind peek_params_kind(const std::string& text);

CodeParams2D params2d_from_kv(const std::string& text);
CodeParams3D params3d_from_kv(const std::string& text);
RobustParams params_robust_from_kv(const std::string& text);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

} // namespace fragcode
