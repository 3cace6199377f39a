//! Geometric kernels shared by the laws, tasks and edge maps.

mod circle;
mod edges;
mod enclosing;
mod graph;
mod point;
mod quadrature;
mod voronoi;

pub use circle::{dist_c, dist_cc, geo_dist, reduce_angle, CirclePos};
pub use edges::{edges_circle_r_disk, edges_r_disk, edges_r_inf_disk, edges_r_ld};
pub use enclosing::{circumcenter, enclosing_ball};
pub use graph::{config_diameter, connected_components, EdgeSet};
pub use point::{Interval, Point};
pub use quadrature::{
    integrate_simpson, mass_centroid_1d, mass_centroid_1d_refined, mass_moment_1d, Density, DEFAULT_QUAD_NODES,
};
pub use voronoi::{voronoi_1d, voronoi_1d_by_agent};
