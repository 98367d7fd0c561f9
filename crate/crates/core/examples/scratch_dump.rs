// Temporary: dump all paper-table analogues for manual diffing.
use tiltmult::algebra::{bmw_cell_closed, bmw_dims};
use tiltmult::tensor::{tilting_grid_recurrence, weyl_grid, MultiplicityGrid};
use tiltmult::Regime;

fn dump(name: &str, grid: &MultiplicityGrid, lo: u32, hi: u32, step: u32) {
    println!("== {name} ==");
    let mut n = lo;
    while n <= hi {
        let row: Vec<String> = grid
            .row(n)
            .iter()
            .map(|(m, v)| format!("{m}:{v}"))
            .collect();
        println!("{n}: {}", row.join(" "));
        n += step;
    }
}

fn main() {
    dump("Table 1 (weyl)", &weyl_grid(16), 0, 16, 1);
    dump(
        "Table 2 (l=5)",
        &tilting_grid_recurrence(Regime::char_zero_root(5).unwrap(), 16).unwrap(),
        0,
        16,
        1,
    );
    dump(
        "Table 3 (l=3)",
        &tilting_grid_recurrence(Regime::char_zero_root(3).unwrap(), 16).unwrap(),
        0,
        16,
        1,
    );
    dump(
        "Table 4 (p=2, odd rows)",
        &tilting_grid_recurrence(Regime::modular_q_one(2).unwrap(), 19).unwrap(),
        1,
        19,
        2,
    );
    dump(
        "Table 5 (p=3)",
        &tilting_grid_recurrence(Regime::modular_q_one(3).unwrap(), 16).unwrap(),
        0,
        16,
        1,
    );
    dump(
        "Table 6 (l=2, p=3, odd rows)",
        &tilting_grid_recurrence(Regime::mixed(2, 3).unwrap(), 19).unwrap(),
        1,
        19,
        2,
    );
    dump(
        "Table 7 (l=3, p=2)",
        &tilting_grid_recurrence(Regime::mixed(3, 2).unwrap(), 16).unwrap(),
        0,
        16,
        1,
    );

    println!("== Table 8 (bmw cell) ==");
    for n in 0..=10u32 {
        let row: Vec<String> = bmw_cell_closed(n)
            .iter()
            .map(|(m, v)| format!("{m}:{v}"))
            .collect();
        println!("{n}: {}", row.join(" "));
    }
    println!("== Table 9 (bmw simple l=5 p=0) ==");
    for n in 0..=10u32 {
        let r = bmw_dims(Regime::char_zero_root(5).unwrap(), n).unwrap();
        let row: Vec<String> = r
            .simple_dims
            .iter()
            .map(|(m, v)| format!("{m}:{v}"))
            .collect();
        println!("{n}: {}", row.join(" "));
    }
    println!("== Table 10 (bmw simple l=5 p=2) ==");
    for n in 7..=10u32 {
        let r = bmw_dims(Regime::mixed(5, 2).unwrap(), n).unwrap();
        let row: Vec<String> = r
            .simple_dims
            .iter()
            .map(|(m, v)| format!("{m}:{v}"))
            .collect();
        println!("{n}: {}", row.join(" "));
    }
}
