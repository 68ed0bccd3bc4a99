#include "bohrlab/series_json.hpp"

#include <cmath>
#include <limits>

#include "bohrlab/errors.hpp"

namespace bohr {

nlohmann::json to_json(const TruncatedSeries& f)
{
    nlohmann::json re = nlohmann::json::array();
    nlohmann::json im = nlohmann::json::array();
    for (Complex c : f.coeffs()) {
        re.push_back(c.real());
        im.push_back(c.imag());
    }
    nlohmann::json j;
    j["coeffs_re"] = std::move(re);
    j["coeffs_im"] = std::move(im);
    const double cap = f.tail_cap();
    if (std::isfinite(cap)) {
        j["tail_cap"] = cap;
    } else {
        j["tail_cap"] = nullptr;
    }
    return j;
}

TruncatedSeries series_from_json(const nlohmann::json& j)
{
    if (!j.is_object() || !j.contains("coeffs_re")) {
        throw SeriesFormatError("series JSON needs a \"coeffs_re\" array");
    }
    try {
        const auto re = j.at("coeffs_re").get<std::vector<double>>();
        std::vector<double> im(re.size(), 0.0);
        if (j.contains("coeffs_im")) {
            im = j.at("coeffs_im").get<std::vector<double>>();
        }
        if (re.empty() || im.size() != re.size()) {
            throw SeriesFormatError("coeffs_re and coeffs_im must be nonempty and of equal length");
        }
        double cap = 0.0;
        if (j.contains("tail_cap")) {
            const auto& t = j.at("tail_cap");
            cap = t.is_null() ? std::numeric_limits<double>::infinity() : t.get<double>();
        }
        if (!(cap >= 0.0)) {
            throw SeriesFormatError("tail_cap must be nonnegative");
        }
        std::vector<Complex> c(re.size());
        for (std::size_t n = 0; n < re.size(); ++n) {
            c[n] = {re[n], im[n]};
        }
        return TruncatedSeries(std::move(c), cap);
    } catch (const nlohmann::json::exception& e) {
        throw SeriesFormatError(std::string("malformed series JSON: ") + e.what());
    }
}

} // namespace bohr
