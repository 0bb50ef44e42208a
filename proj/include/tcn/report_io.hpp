#pragma once

#include <filesystem>
#include <vector>

#include <json.hpp>

#include "tcn/bounds.hpp"
#include "tcn/sphere_planner.hpp"

namespace tcn {

// {"space","n","field","lower","lower_source","zcl","upper","upper_cat",
//  "upper_growth","exact","certificate"}; certificate is null or
// {"factors": [[{"basis","coeff"}...]...], "product": [...]}.
nlohmann::json report_to_json(const BoundReport& report);

// {"k","n","domain","samples","paths"}
nlohmann::json plan_to_json(const Plan& plan);

// A JSON array of coordinate arrays; every point is normalized onto the sphere.
std::vector<SpherePoint> read_config(const nlohmann::json& doc);
std::vector<SpherePoint> read_config_file(const std::filesystem::path& path);

}  // namespace tcn
