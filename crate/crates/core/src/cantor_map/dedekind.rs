use crate::digits::{DigitExpansion, PeriodicDigits, UnitValue};
use crate::error::{Error, Result};

/// Builds `0.z₁…z_l 9 z_{l+2} 9 z_{l+4} …`, a value with no preimage under
/// the interleaving map `C`. `filler` supplies `z_{l+2}, z_{l+4}, …`.
pub fn dedekind_family(prefix: &[u8], filler: &PeriodicDigits) -> Result<UnitValue> {
    if let Some(&d) = prefix.iter().find(|&&d| d > 9) {
        return Err(Error::InvalidDigit(d));
    }
    if filler.is_eventually_nines() {
        return Err(Error::ImproperStream);
    }
    let tail = PeriodicDigits::interleave(&PeriodicDigits::nines(), filler, usize::MAX)?;
    let mut preperiod = prefix.to_vec();
    preperiod.extend_from_slice(tail.preperiod());
    let digits = PeriodicDigits::new(preperiod, tail.period().to_vec())?;
    Ok(DigitExpansion::from_periodic(digits)?.into())
}
