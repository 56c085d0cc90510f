pub mod embed;
pub mod generators;
pub mod graph;
pub mod io;
pub mod kneser;
pub mod oracle;
pub mod outerplanar;
pub mod planar;
pub mod planarity;
pub mod proper;
pub mod verify;
