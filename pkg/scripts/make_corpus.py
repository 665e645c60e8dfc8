#!/usr/bin/env python3
"""Author the hand-labeled paragraph corpus used by the selector tests.

Writes tests/data/corpus/article_NN.json plus labels.json. Labels are the
frozen per-paragraph ground truth for the three-predicate rule; they were
derived once with the independent oracle in tests/oracles.py and reviewed
by hand before freezing.
"""

import json
import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent
OUT = ROOT / "tests" / "data" / "corpus"

ARTICLES = [
    {
        "url": "https://news-fixture.test/health/booster-campaigns",
        "title": "Autumn booster campaigns weighed as variants circulate",
        "paragraphs": [
            "Health agencies in several countries are weighing updated booster campaigns this autumn as new variants circulate widely.",
            "“The protection against severe outcomes remains remarkably stable over six months,” said Dr Amelia Rostova of the Helsinki Vaccine Institute, summarising the trial data.",
            "Enrolment reached 48,000 participants across nine sites, with a median follow-up of 31 weeks and a dropout rate below four percent.",
            "Prof Daniel Okafor, an epidemiologist at Lagos State University, told reporters that “waning antibody levels do not automatically translate into waning protection against hospitalisation.”",
            "Researchers at the Karolinska Institute cautioned that “comparisons across age bands remain fraught with selection effects in observational data.”",
            "Dr Mei-Ling Zhou of the Taipei Public Health College briefed lawmakers on the rollout schedule without taking questions from the gallery.",
            "Dr Jonas Petridis of the Athens Medical Academy called the new schedule “sensible.”",
            "The ministry's advisers reviewed the campaign's costs, but the committee's final report stayed under wraps for another week.",
            "'We are not seeing any signal that would justify delaying second doses,' said Dr Farah Masri, who directs the immunology laboratory at Beirut National University.",
            "Liam Carter, who has tracked procurement contracts for years, attended the hearing alongside union representatives.",
            "‘The modelling suggests a narrow but real window for catch-up campaigns this winter,’ explained Prof Ingrid Solberg of the Bergen School of Public Health.",
            "Supply contracts cover 12 million doses for the first quarter, with an option for eight million more if uptake beats projections.",
            "Kenji Yamamoto, the team's statistician, said the confidence intervals were “wider than many commentators appreciated at the time.”",
            "The WHO and the CDC issued a joint statement, but UNICEF declined to comment on the figures it had circulated earlier.",
            "«Population-level immunity is a moving target that we measure poorly», warned Dr Tomas Keller of the Vienna Institute for Immunology.",
            "Officials expect a final decision before the end of the month, with deliveries beginning shortly afterwards.",
        ],
    },
    {
        "url": "https://news-fixture.test/climate/attribution-floods",
        "title": "Attribution science moves faster after record floods",
        "paragraphs": [
            "Within days of the floods, attribution teams were running ensembles to estimate how much climate change had loaded the dice.",
            "“We can now say with confidence that an event of this magnitude became roughly three times more likely,” said Prof Henrik Dalgaard of the Copenhagen Climate Institute.",
            "The river gauge at Sankt Pölten recorded its highest level since measurements began in 1893, exceeding the previous mark by over a metre.",
            "Dr Lucia Ferreira, a hydrologist at the Lisbon Technical University, noted that “urban drainage systems were never designed for rainfall intensities like these.”",
            "A spokesperson for the basin authority said the agency's models had flagged the risk, but declined to elaborate on the timeline.",
            "Insurance analysts put preliminary losses at 4.2 billion euros, a figure likely to rise as claims are processed through the autumn.",
            "Prof Milos Janek of the Prague Hydrology Academy argued that “retention basins upstream would have shaved perhaps twenty centimetres off the peak, no more.”",
            "The mayor's office said the city's warning sirens had worked as intended, though residents' accounts differed sharply.",
            "Marta Kowalska, who chairs the regional planning board, met engineers on site and promised an audit of the levee system.",
            "«The window for managed retreat from the floodplain is closing quickly», added Dr Yusuf Demir of the Ankara Research Centre for Water Policy.",
            "Satellite imagery showed inundation across 310 square kilometres, with agricultural land accounting for two thirds of the area.",
            "‘Attribution still cannot tell us which neighbourhood floods next, and we should be honest about that limit,’ explained Dr Anna Leclerc of the Geneva School of Environmental Science.",
            "Downstream towns escaped with minor damage after crews reinforced embankments overnight.",
            "One resident described the scene as “apocalyptic.”",
            "Researchers at the university expect the full peer-reviewed analysis within six weeks.",
            "Recovery funding will be debated in parliament next session, alongside a proposal to overhaul flood insurance.",
        ],
    },
    {
        "url": "https://news-fixture.test/nutrition/ultraprocessed-trial",
        "title": "Trial links ultra-processed diets to higher energy intake",
        "paragraphs": [
            "A tightly controlled feeding trial has reignited the debate over how ultra-processed foods drive overeating.",
            "Participants on the ultra-processed arm consumed about 500 additional calories per day, the paper reports, despite matched macronutrients.",
            "“People ate faster and felt less full on the ultra-processed diet, and the effect appeared within the first week,” said Dr Rosa Jiménez of the Madrid Nutrition Institute.",
            "Dr. Priya Nair of Chennai Medical College called the claim circulating online “a complete misreading of the data we published.”",
            "The trial's critics, several of them consultants to food manufacturers, question the generalisability of a 28-day inpatient design.",
            "Prof Alan Whitfield, who leads the appetite laboratory at Leeds Metropolitan University, says the findings “line up neatly with what free-living cohort studies have hinted at for a decade.”",
            "Supermarket sales data show ultra-processed items accounting for 52 percent of household calories, up from 47 percent ten years ago.",
            "Nutritionists at the college cautioned against reading a single trial as settled science.",
            "Sofia Brandt, author of a popular cookbook, hosted a panel on reformulation at the food fair.",
            "'Fibre and texture, not some mysterious additive, explain most of the gap we measured,' argued Dr Tomas Ribeiro of the Porto School of Biomedical Sciences.",
            "The committee's draft guidance avoids the term entirely, speaking instead of foods high in fat, salt or sugar.",
            "“Astonishing,” was the verdict of one editor.",
            "Industry groups responded that the category is too broad to regulate, lumping fortified breads with confectionery.",
            "A follow-up trial with 90 participants and a crossover design is already enrolling at the same unit.",
            "«Label reform only works when shoppers actually read labels», noted Prof Camille Arnaud of the Lyon Research Center for Public Nutrition.",
            "Ministers will receive the advisory committee's report before the budget statement.",
        ],
    },
    {
        "url": "https://news-fixture.test/sleep/shift-work-cognition",
        "title": "Night shifts and cognition: new cohort data",
        "paragraphs": [
            "Two decades of records from 28,000 shift workers suggest a measurable cognitive cost to sustained night work.",
            "“The deficit we observe is modest per year but it compounds, and recovery after switching back is incomplete,” said Prof Sarah Lindqvist of the Stockholm Sleep Research Centre.",
            "The effect size equated to roughly four additional years of age-related decline for workers with fifteen years of rotating nights.",
            "Dr Omar Haddad of the Amman University Hospital told the conference that “chronotype matching could blunt much of the harm, if rosters ever took it seriously.”",
            "Union representatives welcomed the study but warned that staffing realities leave little room for chronotype-based scheduling.",
            "Hannah Berger, a charge nurse for eighteen years, described rosters that flipped between days and nights within a single week.",
            "The authors adjusted for education, baseline cognition, alcohol use and cardiovascular risk, among other confounders.",
            "‘We should treat circadian disruption as an occupational exposure, with limits, monitoring and compensation,’ argued Dr Felix Naumann of the Munich Institute for Occupational Health.",
            "An accompanying editorial called the dataset “unusually rich” but stopped short of endorsing the causal claim.",
            "Night-shift premiums average 14 percent across the sector, according to payroll data compiled by the employers' association.",
            "Dr Grace Mutombo, dean of the Kinshasa School of Medicine, noted in a statement that “most of the global evidence base still comes from high-income registries.”",
            "The hospital's pilot of forward-rotating schedules cut sick days by nine percent in its first year.",
            "Employers said the findings were “troubling.”",
            "Researchers at the institute plan a five-year extension with wearable-derived sleep measures.",
            "Regulators in two countries have opened consultations on maximum consecutive night shifts.",
            "A final report is expected before the parliamentary recess.",
        ],
    },
    {
        "url": "https://news-fixture.test/ai/diagnostic-triage-rollout",
        "title": "Hospitals pilot algorithmic triage for chest pain",
        "paragraphs": [
            "Four emergency departments will pilot an algorithmic triage tool for chest pain this winter, the trust confirmed.",
            "“Sensitivity held up across every subgroup we prespecified, including patients over eighty,” said Dr Nadia Osei of the Accra Institute of Medical Informatics.",
            "The tool flags one in twelve presentations for expedited testing, roughly halving the current door-to-troponin time.",
            "Prof Viktor Lindgren of the Uppsala University Hospital added that “external validation in a second health system is the part most vendors skip, and it is the part that matters.”",
            "Patient advocates asked who carries liability when the algorithm and the clinician disagree.",
            "The vendor's marketing materials claim a 23 percent reduction in missed diagnoses, a figure the trust could not verify.",
            "Dr Wei Chen, who runs the evaluation laboratory at the Singapore Health Academy, warned that “dashboards have a way of becoming targets rather than instruments.”",
            "Nurses piloting the interface logged 140 usability issues in the first month, most of them minor.",
            "Tom Gallagher, the trust's chief information officer, presented the deployment plan to the board.",
            "'An algorithm that cannot explain its reasoning will struggle to survive its first serious incident review,' noted Prof Amara Diallo of the Dakar School of Digital Health.",
            "Trial registration documents show the primary endpoint was changed once, before unblinding, with the committee's approval.",
            "The pilot's consent model is opt-out, with posters and leaflets in six languages.",
            "A clinician described the rollout pace as “brisk.”",
            "«Procurement rules, not model accuracy, decide what reaches the bedside», explained Dr Lukas Meier of the Zurich Research Centre for Health Systems.",
            "The university will host an open seminar on the interim results in March.",
            "A decision on wider rollout rests with the regional board next year.",
        ],
    },
    {
        "url": "https://news-fixture.test/marine/coral-heatwave-response",
        "title": "Reef survey finds patchy recovery after marine heatwave",
        "paragraphs": [
            "The first systematic survey since last summer's marine heatwave shows recovery that is real but starkly uneven.",
            "Transects on the sheltered leeward reefs recorded live coral cover of 34 percent, against 11 percent on exposed sites.",
            "“Thermal refugia are buying us time, but they are not a strategy,” said Dr Isabel Moreno of the Veracruz Marine Research Station, presenting the survey.",
            "Tourism operators reported a strong season despite the damage, complicating the politics of new anchoring restrictions.",
            "Prof Takeshi Mori of the Okinawa Institute of Ocean Science told delegates that “assisted gene flow experiments deserve a regulatory pathway, not a permanent pilot status.”",
            "The survey logged 61 bleaching-resistant colonies, which divers tagged for the breeding programme.",
            "Dr Leila Haddad, a reef ecologist at the Alexandria University aquarium wing, argued that “shading trials scaled beyond a hectare remain engineering fantasies for now.”",
            "Conservation groups called the findings “sobering.”",
            "Fishing cooperatives negotiated seasonal closures covering the three most damaged bays.",
            "Miguel Santos, who has skippered dive charters for twenty years, pointed his boat at a stretch of grey rubble that was technicolour a decade ago.",
            "‘Restoration without emissions cuts is gardening in a burning house,’ warned Prof Elena Vasquez of the Cartagena School of Coastal Management.",
            "The heatwave's degree-heating-weeks peaked at 14.2, the second-highest value in the satellite record.",
            "Nursery-grown fragments survived at 72 percent after one year, the programme's best cohort so far.",
            "Researchers at the station will repeat the transects before the next spawning season.",
            "«Insurance-style reef bonds are moving from slideware to term sheets», noted Dr Johan Brink of the Rotterdam Institute for Blue Finance.",
            "A full atlas of the survey data goes online next month.",
        ],
    },
    {
        "url": "https://news-fixture.test/cardio/exercise-dose-response",
        "title": "How much exercise is enough? Dose-response study weighs in",
        "paragraphs": [
            "A pooled analysis of nine cohorts puts numbers on a question patients ask constantly: how much exercise is enough?",
            "Mortality risk fell steeply up to 150 weekly minutes of moderate activity, with smaller gains continuing to at least 300 minutes.",
            "“The curve flattens but it never turns, and that should reassure the marathon crowd,” said Prof Johan Eriksson of the Oslo Sports Medicine Institute.",
            "Dr Fatima el-Sayed of the Cairo Heart Research Center noted that “the steepest part of the curve belongs to people moving from nothing to something.”",
            "Wearable-derived minutes differed from questionnaire estimates by a median of 40 percent, underscoring old measurement worries.",
            "Gym memberships spike every January, yet attendance data show half of new members gone by April.",
            "Ricardo Álvarez, a physiotherapist, demonstrated strength circuits adapted for patients with knee osteoarthritis.",
            "'Prescribing exercise without prescribing the barriers away is half a treatment,' argued Dr Siobhan Murphy of the Dublin College of General Practice.",
            "The analysis adjusted for smoking, body mass index, alcohol and baseline morbidity; reverse causation was probed with lagged exposures.",
            "An editorial praised the dose-response framing as “clinically legible.”",
            "Insurers in two markets already discount premiums for verified activity, a practice privacy advocates call “coercion with extra steps.”",
            "Prof Henrique Costa, who chairs the cardiology academy panel at the São Paulo Medical Academy, says “the guideline ceiling of 300 minutes has outlived its evidence.”",
            "Participants over 75 showed the largest absolute risk reductions, a finding the authors flag for guideline committees.",
            "“Encouraging,” was how one clinician summed it up.",
            "«Stairs beat supplements for most of the people most of the time», added Dr Karin Holm of the Gothenburg School of Public Health.",
            "The full dataset will be deposited in an open repository next quarter.",
        ],
    },
    {
        "url": "https://news-fixture.test/psych/misinformation-inoculation",
        "title": "Prebunking games show durable effects in field trial",
        "paragraphs": [
            "Can a five-minute game inoculate people against manipulation techniques? A large field trial says partly, and for a while.",
            "“Effects decayed by half within ten weeks, which argues for boosters here too,” said Dr Emma Van Dijk of the Amsterdam Media Psychology Laboratory, with a smile.",
            "The trial randomised 22,000 users of a video platform, embedding prebunking clips into the usual advertising slots.",
            "Prof Pablo Reyes of the Santiago School of Communication told the panel that “technique-based inoculation travels across topics in a way fact-specific debunking never has.”",
            "Critics of the framing argue that the metaphor of a vaccine oversells both the durability and the neutrality of the intervention.",
            "Detection of manipulative rhetoric improved by 0.3 standard deviations; sharing intentions for false posts fell by 9 percent.",
            "Dr Sipho Ndlovu, who heads the Johannesburg Institute for Digital Society, cautioned that “platform experiments measure what platforms permit us to measure.”",
            "The clips performed worst among users who already distrusted the platform, a pattern the authors call the credibility ceiling.",
            "Maja Novak, a teacher who piloted the classroom version, walked students through a forged screenshot exercise.",
            "‘Media literacy budgets are rounding errors next to the advertising they compete with,’ noted Prof Lena Fischer of the Hamburg Academy of Media Studies.",
            "Replication files and preregistration documents are public, down to the ad-targeting parameters.",
            "One moderator called the results “heartening.”",
            "Funding came from a consortium of foundations, with the platform contributing ad inventory but no money.",
            "«Inoculation is cheap, scalable and slightly boring, which is why it might actually ship», argued Dr Mateusz Zielinski of the Warsaw Research Centre for Information Integrity.",
            "The team's next study moves from labs and feeds to family group chats.",
            "Policymakers in three countries have asked for briefings on the curriculum version.",
        ],
    },
    {
        "url": "https://news-fixture.test/health/antibiotic-resistance-farms",
        "title": "Farm antibiotic cuts show up in resistance surveillance",
        "paragraphs": [
            "Five years after the livestock antibiotic restrictions took effect, surveillance data are beginning to move.",
            "Resistant E. coli isolates from retail chicken fell from 61 to 44 percent, the steepest decline in the monitoring programme's history.",
            "“Farm-level stewardship works faster than we dared to model,” said Dr Agnes Njoroge of the Nairobi Veterinary Research Institute, reviewing the figures.",
            "Prof Erik Madsen of the Aarhus University farm economics unit added that “producers absorbed the transition with far less disruption than the lobby predicted.”",
            "The industry association disputed the causal link, pointing to parallel changes in slaughterhouse hygiene rules.",
            "Wastewater sampling near processing plants tells a muddier story, with resistance genes persisting in sediment years after use declined.",
            "Dr Chioma Eze, a microbiologist at the Enugu College of Veterinary Medicine, warned that “colistin resistance genes do not respect the farm gate, or the clinic door.”",
            "Feed additive sales shifted toward zinc and probiotic blends, with mixed evidence behind both.",
            "Jorge Ramírez, who farms 40,000 broilers, walked inspectors through his ventilation retrofit.",
            "'Human prescribing still dwarfs agricultural use in our resistance models,' explained Prof Dana Weiss of the Tel Aviv School of Population Health.",
            "The report's annexes list 14 countries that missed their reduction targets, most citing enforcement gaps.",
            "A ministry spokesperson called the trend “unambiguous.”",
            "Border testing flagged imported products at three times the domestic resistance rate, reviving a tariff debate.",
            "«Surveillance without sequencing is bookkeeping; with sequencing it becomes epidemiology», noted Dr Henrik Juul of the Odense Research Center for Genomic Surveillance.",
            "Researchers at the institute will publish isolate-level data under an open licence.",
            "Parliament reviews the restriction framework next spring.",
        ],
    },
    {
        "url": "https://news-fixture.test/environment/air-quality-schools",
        "title": "School air filters trial reports attendance gains",
        "paragraphs": [
            "A two-winter trial of classroom air filtration reports gains that go beyond infection control.",
            "Absences fell by 11 percent in filtered classrooms, with the largest effect during the January influenza peak.",
            "“Cleaner air turned out to be one of the few interventions that parents, unions and treasurers all like,” said Prof Olivia Hartmann of the Brussels Institute for Public Health.",
            "The units cost 410 euros per classroom per year to run, a figure the authors set against the cost of a single supply-teacher day.",
            "Dr Samuel Koffi of the Abidjan University environmental health group noted that “particulate baselines inside classrooms varied fourfold across the same city.”",
            "Teachers reported noise complaints early on, which subsided after the units were swapped for larger, slower models.",
            "Facilities managers praised the trial's maintenance logs.",
            "‘Ventilation standards for schools were written for chalk dust, not pathogens,’ argued Dr Renata Kovács of the Budapest School of Building Engineering.",
            "Asthma-related nurse visits halved in filtered rooms, an endpoint the trial was not powered for but which parents seized upon.",
            "Petra Lang, who chairs the parents' council, lobbied the district to extend the programme to gyms and dining halls.",
            "CO2 readings, displayed on classroom dashboards, became an unexpected teaching tool in science lessons.",
            "A headteacher described the procurement process as “byzantine.”",
            "«Filtration is the seatbelt of indoor air: boring, cheap and effective», said Dr Nikolai Orlov of the Tallinn Research Centre for Indoor Climate.",
            "The education ministry's cost-benefit annex leans heavily on the attendance findings.",
            "Manufacturers are now marketing classroom bundles, prompting calls for independent certification.",
            "A national rollout decision is expected alongside the autumn budget.",
        ],
    },
]


def main() -> None:
    OUT.mkdir(parents=True, exist_ok=True)
    sys.path.insert(0, str(ROOT / "tests"))
    from oracles import oracle_select

    labels = {}
    total = 0
    for i, article in enumerate(ARTICLES, start=1):
        name = f"article_{i:02d}.json"
        (OUT / name).write_text(
            json.dumps(article, indent=2, ensure_ascii=False) + "\n", "utf-8"
        )
        qualifying = oracle_select(article["paragraphs"])
        labels[name] = qualifying
        total += len(article["paragraphs"])
        print(f"{name}: {len(article['paragraphs'])} paragraphs, qualifying={qualifying}")
    (OUT / "labels.json").write_text(
        json.dumps(labels, indent=2) + "\n", "utf-8"
    )
    print(f"total paragraphs: {total}")


if __name__ == "__main__":
    main()
