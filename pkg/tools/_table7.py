TABLE7 = [
    (2, 96, 29, 26, ["71", "64113173343", "27771046431"]),
    (2, 96, 30, 24, ["5", "24076056631", "6252773246"]),
    (2, 96, 31, 24, ["3", "6305574556", "2641521632"]),
    (2, 170, 48, 42, ["1000000000000000377323447615", "4135600657027030415272654623"]),
    (2, 170, 52, 38, ["341603416034160314066672363", "427200026166224122662430431"]),
    (3, 140, 26, 58, ["75656265543767850565651", "6273308468022430087634822263154874"]),
    (3, 140, 25, 59, ["83434633507657031443433", "36887111402772710175802677383402711"]),
    (3, 99, 27, 35, ["03000000000003141", "5151832674585001", "4201041431785337"]),
    (3, 99, 28, 34, ["0688888888888505", "186426033663544", "5884464650276512"]),
    (3, 99, 25, 37, ["000000100000385", "51172578486836861", "65173507073567432"]),
    (3, 99, 26, 35, ["000000888888521", "1843867363731323", "3502668787557716"]),
    (3, 104, 30, 35, ["00000000001000034635424162", "63878246257051483836350245"]),
    (3, 104, 31, 34, ["0000000000888885626614647", "31773813867864631757554811"]),
    (3, 112, 22, 48, ["225217636715327031", "3855753628142726518311446808"]),
    (3, 112, 23, 46, ["48608726228658785", "6355351383058703507508157342"]),
    (3, 104, 21, 43, ["00000000036740414327721684", "13231000037464840407461361"]),
    (3, 104, 23, 41, ["0000000006051168412467604", "2863555552403232277082171"]),
    (3, 104, 28, 37, ["30000000000000774187451744", "35747612345623613624005564"]),
    (3, 104, 31, 34, ["654720654720653833336071", "634261474208860240816081"]),
    (3, 160, 24, 72, ["1000000000007321057462270530227344544615", "6588363577683773486427864331370312740533"]),
    (3, 160, 27, 68, ["856085608560785553784776448685835748281", "350237067675375315443715352658617323401"]),
    (3, 160, 22, 75, ["000300000004061832741081527113005224724", "763324150001553440888665474088827327074"]),
    (3, 160, 26, 69, ["0003628805165221013063606507063164863", "7841540000011055215802127766367524533"]),
    (3, 160, 23, 73, ["0000003000068511234582485684775686524412", "6326771628047648801417446130222227241818"]),
    (3, 160, 27, 67, ["0000007032060245487053016568864183237", "54702682323740810856185340274102477412"]),
    (3, 208, 14, 117, ["0748724866871624680580367184142241783262013113142526", "1245403380035706885414525207425072611683628176418272"]),
    (3, 208, 9, 126, ["0431024638315531438181714874147403865036051473417760472", "707452166345144686117316063134645810071144055574570547"]),
    (4, 140, 18, 75, ["101", "aababba1aa1b11b0baa", "111110abab1a100b1a0b", "b1b10b010b01ba1100ab", "1110a0010aaa01bab10a", "b1bab0baaaa0a1bbaabb", "ba0baabbb0a0a1babb10"]),
    (4, 140, 19, 72, ["11", "a0b1a1ba0ab010bb0a", "101011b0a10abbb01bb", "ba100bbaa110b10111b", "1011bbbaa0a001a0baa", "ba1b00b1b1bb10b0a0b", "b11a0a1a11bb10b1a10"]),
    (5, 78, 18, 40, ["12312024143330311210411103220134021044", "111341132034241330331232130030204321433"]),
    (5, 78, 18, 37, ["111424141431404200144344223204410104", "1003123311124341314340434104421210103"]),
]
