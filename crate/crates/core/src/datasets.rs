//! The six real datasets used in the published case study, embedded as the
//! exact decimal strings of the source listings and parsed at load time.

use crate::error::{Error, Result};
use crate::rng::fnv1a64;
use crate::sample::{Sample, WindowSpec};

/// Identifier of an embedded dataset.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DatasetId {
    Ds1,
    Ds2,
    Ds3,
    Ds4,
    Ds5,
    Ds6,
}

impl DatasetId {
    pub const ALL: [DatasetId; 6] = [
        DatasetId::Ds1,
        DatasetId::Ds2,
        DatasetId::Ds3,
        DatasetId::Ds4,
        DatasetId::Ds5,
        DatasetId::Ds6,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            DatasetId::Ds1 => "ds1",
            DatasetId::Ds2 => "ds2",
            DatasetId::Ds3 => "ds3",
            DatasetId::Ds4 => "ds4",
            DatasetId::Ds5 => "ds5",
            DatasetId::Ds6 => "ds6",
        }
    }

    /// Window size used in the published analysis of this dataset.
    pub fn default_window(&self) -> WindowSpec {
        let m = match self {
            DatasetId::Ds1 => 2,
            DatasetId::Ds2 => 20,
            DatasetId::Ds3 => 3,
            DatasetId::Ds4 => 25,
            DatasetId::Ds5 => 11,
            DatasetId::Ds6 => 2,
        };
        WindowSpec { m }
    }

    pub fn citation(&self) -> &'static str {
        match self {
            DatasetId::Ds1 => "Montgomery, Peck & Vining (2021)",
            DatasetId::Ds2 => {
                "active repair times (hours) of an airborne communication transceiver; Qiu & Jia (2018)"
            }
            DatasetId::Ds3 => "Sathar & Jose (2020)",
            DatasetId::Ds4 => "Thomas & Jose (2021)",
            DatasetId::Ds5 => {
                "vinyl chloride concentrations mapped to (0,1) by the probability integral transform; Xiong et al. (2022)"
            }
            DatasetId::Ds6 => {
                "thousands of cycles to failure of electrical appliances in a life test; Lawless (2011)"
            }
        }
    }

    pub(crate) fn raw(&self) -> &'static str {
        match self {
            DatasetId::Ds1 => DS1,
            DatasetId::Ds2 => DS2,
            DatasetId::Ds3 => DS3,
            DatasetId::Ds4 => DS4,
            DatasetId::Ds5 => DS5,
            DatasetId::Ds6 => DS6,
        }
    }
}

impl std::str::FromStr for DatasetId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "ds1" | "1" => Ok(DatasetId::Ds1),
            "ds2" | "2" => Ok(DatasetId::Ds2),
            "ds3" | "3" => Ok(DatasetId::Ds3),
            "ds4" | "4" => Ok(DatasetId::Ds4),
            "ds5" | "5" => Ok(DatasetId::Ds5),
            "ds6" | "6" => Ok(DatasetId::Ds6),
            other => Err(Error::Argument(format!(
                "unknown dataset '{other}' (expected ds1..ds6)"
            ))),
        }
    }
}

/// A dataset with its provenance and default analysis window.
#[derive(Debug, Clone)]
pub struct NamedDataset {
    pub name: String,
    pub sample: Sample,
    pub source: String,
    /// Present for embedded datasets; user files carry no default.
    pub default_window: Option<WindowSpec>,
}

/// Load one of the embedded datasets.
pub fn load_embedded(id: DatasetId) -> NamedDataset {
    let values: Vec<f64> = id
        .raw()
        .split(',')
        .map(|tok| tok.parse::<f64>().expect("embedded literals parse"))
        .collect();
    NamedDataset {
        name: id.name().to_string(),
        sample: Sample::new(values).expect("embedded data is finite and non-empty"),
        source: id.citation().to_string(),
        default_window: Some(id.default_window()),
    }
}

/// FNV-1a digest of the raw decimal listing, guarding against transcription
/// drift.
pub fn dataset_digest(id: DatasetId) -> u64 {
    fnv1a64(id.raw().as_bytes())
}

const DS1: &str = "15.5,23.75,8.0,17.0,5.5,19.0,24.0,2.5,7.5,11.0,13.0,3.75,25.0,9.75,22.0,18.0,6.0,12.5,2.0,21.5";
const DS2: &str = "0.2,0.3,0.5,0.5,0.5,0.5,0.6,0.6,0.7,0.7,0.7,0.8,0.8,1.0,1.0,1.0,1.0,1.1,1.3,1.5,1.5,1.5,1.5,2.0,2.0,2.2,2.5,3.0,3.0,3.3,3.3,4.0,4.0,4.5,4.7,5.0,5.4,5.4,7.0,7.5,8.8,9.0,10.3,22.0,24.5";
const DS3: &str = "1.42,0.84,2.32,1.84,2.4,0.9,1.49,0.87,1.36,1.25,1.25,1.8,0.86,0.04,0.49,2.08,0.58,0.22,0.06,1.7,2.67,2.39,2.32,2.98,3.21,1.99,1.3,1.25,1.76,1.67,1.36,1.57,1.21,1.24,1.62,0.93,1.32,0.86,1.48,0.85,1.23,1.23,2.14";
const DS4: &str = "99,61,86,113,96,99,83,57,80,79,75,70,15,62,87,95,81,71,44,13,52,97,146,52,52,29,108,135,102,48,66,90,22,72,176,107,84,83,37,67,83,36,49,39,102,66,154,72,63,83,77";
const DS5: &str = "0.0518,0.0518,0.1009,0.1009,0.1917,0.1917,0.1917,0.2336,0.2336,0.2336,0.2733,0.2733,0.3467,0.3805,0.3805,0.4126,0.4431,0.4719,0.4719,0.4993,0.6162,0.6550,0.6550,0.7059,0.7211,0.7356,0.7623,0.7863,0.8178,0.8810,0.9337,0.9404,0.9732,0.9858";
const DS6: &str = "0.014,0.034,0.059,0.061,0.069,0.080,0.123,0.142,0.165,0.210,0.381,0.464,0.479,0.556,0.574,0.839,0.917,0.969,0.991,1.064,1.088,1.091,1.174,1.270,1.275,1.355,1.397,1.477,1.578,1.649,1.702,1.893,1.932,2.001,2.161,2.292,2.326,2.337,2.628,2.785,2.811,2.886,2.993,3.122,3.248,3.715,3.790,3.857,3.912,4.100";
