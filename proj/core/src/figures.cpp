#include "harmsub/figures.hpp"

#include <charconv>
#include <chrono>
#include <ctime>
#include <ostream>

#include <json.hpp>

namespace harmsub {

BoundaryMapQ builtin_map(const std::string& name) {
    if (name == "halfplane")
        return BoundaryMapQ(half_plane_map(), {0.0}, 1e-3,
                            DomainSpec{HalfPlane{-0.5}});
    const std::string prefix = "ellipse:";
    if (name.rfind(prefix, 0) == 0) {
        const std::string params = name.substr(prefix.size());
        const auto comma = params.find(',');
        if (comma == std::string::npos)
            throw Error("builtin_map: expected ellipse:M1,M2");
        double M1 = 0.0, M2 = 0.0;
        const char* b1 = params.data();
        const char* e1 = params.data() + comma;
        const char* b2 = params.data() + comma + 1;
        const char* e2 = params.data() + params.size();
        if (std::from_chars(b1, e1, M1).ptr != e1 ||
            std::from_chars(b2, e2, M2).ptr != e2)
            throw Error("builtin_map: malformed ellipse parameters");
        if (!(M1 > M2) || !(M2 > 0.0))
            throw Error("builtin_map: ellipse requires M1 > M2 > 0");
        return BoundaryMapQ(
            affine_ellipse_map(M1, M2), {}, 1e-3,
            DomainSpec{Ellipse{Complex(1.0), M1 + M2, M1 - M2}});
    }
    throw Error("builtin_map: unknown builtin '" + name + "'");
}

std::string render_map_json(const DiskImage& image, bool include_timestamp) {
    nlohmann::json doc;
    doc["schema_version"] = 1;
    doc["kind"] = "disk_image";
    const auto rows = [](const std::vector<DiskImage::Point>& pts) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& p : pts)
            arr.push_back({p.theta, p.w.real(), p.w.imag()});
        return arr;
    };
    doc["boundary"] = rows(image.boundary);
    doc["interior"] = rows(image.interior);
    if (include_timestamp) {
        const std::time_t t =
            std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
        char buf[32];
        std::strftime(buf, sizeof buf, "%FT%TZ", std::gmtime(&t));
        doc["timestamp"] = buf;
    }
    return doc.dump(2) + "\n";
}

void write_map_csv(std::ostream& os, const DiskImage& image) {
    os << "theta,re,im\n";
    os.precision(17);
    for (const auto& p : image.boundary)
        os << p.theta << ',' << p.w.real() << ',' << p.w.imag() << '\n';
    for (const auto& p : image.interior)
        os << p.theta << ',' << p.w.real() << ',' << p.w.imag() << '\n';
}

} // namespace harmsub
