//! Plain-text orbit-ball cache.
//!
//! ```text
//! # orbit-ball label=bolza z=0,1 w=0.3,1.2 radius=7 exhaustive=true
//! a b c d displacement
//! ...
//! ```
//!
//! Every number is written with 17 significant digits, which round-trips
//! `f64` exactly, so a cached ball is bit-identical to a fresh one.

use std::io::{BufRead, Write};

use crate::error::{Error, Result};
use crate::hypgeo::{HalfPlanePoint, MoebiusElement};
use crate::scalar::Real;

use super::ball::{BallElement, OrbitBall};

const MAGIC: &str = "# orbit-ball";

fn fmt17<T: Real>(x: T) -> String {
    format!("{:.16e}", x.as_f64())
}

fn parse<T: Real>(s: &str, what: &str) -> Result<T> {
    s.parse::<f64>()
        .map(T::lit)
        .map_err(|_| Error::Cache(format!("cannot parse {what} from `{s}`")))
}

impl<T: Real> OrbitBall<T> {
    pub fn write_cache<W: Write>(&self, mut out: W) -> Result<()> {
        writeln!(
            out,
            "{MAGIC} label={} z={},{} w={},{} radius={} exhaustive={}",
            self.label.replace(char::is_whitespace, "_"),
            fmt17(self.base_z.x()),
            fmt17(self.base_z.y()),
            fmt17(self.base_w.x()),
            fmt17(self.base_w.y()),
            fmt17(self.radius),
            self.exhaustive
        )?;
        for e in &self.elements {
            let [a, b, c, d] = e.element.entries();
            writeln!(
                out,
                "{} {} {} {} {}",
                fmt17(a),
                fmt17(b),
                fmt17(c),
                fmt17(d),
                fmt17(e.displacement)
            )?;
        }
        Ok(())
    }

    pub fn read_cache<R: BufRead>(input: R) -> Result<Self> {
        let mut lines = input.lines();
        let header = lines
            .next()
            .ok_or_else(|| Error::Cache("empty file".into()))??;
        let rest = header
            .strip_prefix(MAGIC)
            .ok_or_else(|| Error::Cache(format!("bad header `{header}`")))?;
        let (mut label, mut z, mut w, mut radius, mut exhaustive) = (None, None, None, None, None);
        for field in rest.split_whitespace() {
            let (key, value) = field
                .split_once('=')
                .ok_or_else(|| Error::Cache(format!("bad header field `{field}`")))?;
            match key {
                "label" => label = Some(value.to_owned()),
                "z" | "w" => {
                    let (re, im) = value
                        .split_once(',')
                        .ok_or_else(|| Error::Cache(format!("bad point `{value}`")))?;
                    let pt = HalfPlanePoint::new(parse(re, key)?, parse(im, key)?)?;
                    if key == "z" {
                        z = Some(pt);
                    } else {
                        w = Some(pt);
                    }
                }
                "radius" => radius = Some(parse::<T>(value, "radius")?),
                "exhaustive" => {
                    exhaustive = Some(
                        value
                            .parse::<bool>()
                            .map_err(|_| Error::Cache(format!("bad flag `{value}`")))?,
                    )
                }
                _ => return Err(Error::Cache(format!("unknown header field `{key}`"))),
            }
        }
        let missing = |f: &str| Error::Cache(format!("header lacks `{f}`"));
        let mut elements = Vec::new();
        for line in lines {
            let line = line?;
            if line.trim().is_empty() {
                continue;
            }
            let cols: Vec<&str> = line.split_whitespace().collect();
            if cols.len() != 5 {
                return Err(Error::Cache(format!("expected 5 columns, got `{line}`")));
            }
            let e = |i: usize| parse::<T>(cols[i], "entry");
            elements.push(BallElement {
                element: MoebiusElement::from_stored(e(0)?, e(1)?, e(2)?, e(3)?),
                displacement: e(4)?,
            });
        }
        Ok(OrbitBall {
            label: label.ok_or_else(|| missing("label"))?,
            base_z: z.ok_or_else(|| missing("z"))?,
            base_w: w.ok_or_else(|| missing("w"))?,
            radius: radius.ok_or_else(|| missing("radius"))?,
            elements,
            exhaustive: exhaustive.ok_or_else(|| missing("exhaustive"))?,
        })
    }

    /// File name that identifies the ball by model and base data.
    pub fn cache_file_name(
        label: &str,
        z: &HalfPlanePoint<T>,
        w: &HalfPlanePoint<T>,
        radius: T,
    ) -> String {
        let bits = |t: T| format!("{:016x}", t.as_f64().to_bits());
        format!(
            "{}-{}-{}-{}-{}-{}.ball",
            label.replace(|c: char| !c.is_ascii_alphanumeric(), "_"),
            bits(z.x()),
            bits(z.y()),
            bits(w.x()),
            bits(w.y()),
            bits(radius)
        )
    }
}
