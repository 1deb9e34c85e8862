#pragma once

#include <json.hpp>

#include "qpf/forms.hpp"
#include "qpf/garrett.hpp"
#include "qpf/spectral.hpp"

namespace qpf {

inline constexpr const char* kSchemaId = "qpf/1";

using json = nlohmann::json;

/// Big integers always serialize as decimal strings (tau(n) overflows
/// 64-bit quickly); doubles as shortest round-trip strings.
std::string fmt_double(double x);
std::string fmt_complex(std::complex<double> z);

json to_json(const ExactInt& n);
json to_json(const ExactRational& q);
json to_json(const PadicNumber& x);
json to_json(const RootOfUnity& z);
json to_json(const DirichletCharacter& chi);
json to_json(const QSeries<ExactInt>& f, const std::string& ring_tag = "int");
json to_json(const QSeries<ExactRational>& f);
json to_json(const QSeries<std::complex<double>>& f);
json to_json(const QSeries<PadicNumber>& f);
json to_json(const PadicMatrix& M);
json to_json(const FredholmSeries& P);
json to_json(const NewtonPolygon& np);
/// Includes the complex and (when the roots stay in Q_p) p-adic Satake
/// embeddings, each under its own tag.
json to_json(const HeckeLocalData& d, long padic_prec = 24);
json to_json(const Degree8Factor& f);
json to_json(const CriticalSet& cs);
json to_json(const LPartial& v);

/// Inverse of to_json for integer q-expansions (the CLI interchange format).
QSeries<ExactInt> qseries_int_from_json(const json& j);

}  // namespace qpf
