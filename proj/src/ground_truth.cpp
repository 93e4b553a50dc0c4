#include "ground_truth.hpp"

#include "error.hpp"
#include "rng.hpp"

namespace longview {

GroundTruthSurface sample_ground_truth(const SceneDescription& scene, double density,
                                       std::uint64_t seed) {
    if (density <= 0) throw Error(ErrorCode::invalid_argument, "density must be positive");
    GroundTruthSurface gt;
    gt.per_object_count.assign(scene.objects.size(), 0);
    for (std::size_t i = 0; i < scene.objects.size(); ++i) {
        const SceneObject& obj = scene.objects[i];
        if (!obj.of_interest) continue;
        Rng rng(derive_seed(seed, "ground_truth", static_cast<std::uint64_t>(i)));
        auto samples = sample_shape_surface(obj.shape, density, rng);
        const Eigen::Matrix3d rot = obj.pose.rotation();
        for (const auto& s : samples)
            gt.points.push_back({obj.pose * s.point, rot * s.inward, static_cast<int>(i)});
        gt.per_object_count[i] = static_cast<std::int64_t>(samples.size());
    }
    return gt;
}

} // namespace longview
